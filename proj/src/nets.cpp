#include "x3/nets.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "x3/errors.hpp"

namespace x3 {

bool arc_feasible(const Digraph& d, int v, const std::vector<int>& a_arcs,
                  int arc) {
  const Arc& a = d.arc(arc);
  if (a.head == v || a.tail == v) return false;
  for (int id : a_arcs) {
    if (d.arc(id).head == a.tail) return true;
  }
  return false;
}

bool arc_compatible(const Digraph& d, int v, const std::vector<int>& a_arcs,
                    int arc) {
  const Arc& a = d.arc(arc);
  if (a.head == v || a.tail == v) return false;
  if (!d.adjacent(a.tail, v)) return false;
  for (int id : a_arcs) {
    if (d.arc(id).head == a.tail) return false;
  }
  return true;
}

ArcClasses classify_arcs(const Digraph& d, int v,
                         const std::vector<int>& a_arcs) {
  ArcClasses r;
  std::vector<char> is_head(d.n(), 0);
  for (int id : a_arcs) is_head[d.arc(id).head] = 1;
  for (int arc = 0; arc < d.m(); ++arc) {
    const Arc& a = d.arc(arc);
    if (a.head == v || a.tail == v) continue;
    if (is_head[a.tail]) {
      r.feasible.push_back(arc);
    } else if (d.adjacent(a.tail, v)) {
      r.compatible.push_back(arc);
    }
  }
  return r;
}

NetSpec make_net_spec(const Digraph& d, int v,
                      const std::vector<int>& a_arcs) {
  NetSpec spec;
  spec.v = v;
  spec.a_arcs = a_arcs;
  ArcClasses cls = classify_arcs(d, v, a_arcs);
  // thin the feasible arcs to a system: lowest arc id per tail
  std::set<int> tails;
  for (int id : cls.feasible) {
    if (tails.insert(d.arc(id).tail).second) spec.feasible.push_back(id);
  }
  spec.compatible = std::move(cls.compatible);
  return spec;
}

namespace {

// Checks the spec's structural preconditions and returns sorted pools.
struct Checked {
  std::vector<int> feasible;
  std::vector<int> compatible;
};

Checked validate(const NetSpec& spec, const Digraph& d) {
  if (spec.v < 0 || spec.v >= d.n()) {
    throw ConstructionFailedError("hub vertex out of range");
  }
  if (spec.a_arcs.empty()) {
    throw ConstructionFailedError("empty arc set at hub");
  }
  std::set<int> seen;
  std::set<int> heads;
  for (int id : spec.a_arcs) {
    if (id < 0 || id >= d.m()) {
      throw ConstructionFailedError("hub arc id out of range");
    }
    if (d.arc(id).tail != spec.v) {
      throw ConstructionFailedError("hub arc does not leave the hub");
    }
    if (!seen.insert(id).second) {
      throw ConstructionFailedError("repeated hub arc");
    }
    if (!heads.insert(d.arc(id).head).second) {
      throw ConstructionFailedError("two hub arcs share a head");
    }
  }
  Checked c;
  c.feasible = spec.feasible;
  c.compatible = spec.compatible;
  std::sort(c.feasible.begin(), c.feasible.end());
  std::sort(c.compatible.begin(), c.compatible.end());
  std::set<int> f_tails;
  for (int id : c.feasible) {
    if (id >= 0 && id < d.m() && !f_tails.insert(d.arc(id).tail).second) {
      throw ConstructionFailedError("two feasible arcs share a tail");
    }
  }
  auto check_pool = [&](const std::vector<int>& pool, bool feas) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      int id = pool[i];
      if (id < 0 || id >= d.m()) {
        throw ConstructionFailedError("pool arc id out of range");
      }
      if (i > 0 && pool[i - 1] == id) {
        throw ConstructionFailedError("repeated pool arc");
      }
      bool ok = feas ? arc_feasible(d, spec.v, spec.a_arcs, id)
                     : arc_compatible(d, spec.v, spec.a_arcs, id);
      if (!ok) {
        throw ConstructionFailedError(
            std::string(feas ? "feasible" : "compatible") +
            " pool holds arc " + std::to_string(id) +
            " that does not qualify");
      }
    }
  };
  check_pool(c.feasible, true);
  check_pool(c.compatible, false);
  return c;
}

// For each hub arc, the lowest unused pool arc leaving that arc's head.
std::vector<int> match_partners(const Digraph& d,
                                const std::vector<int>& a_arcs,
                                const std::vector<int>& feasible_pool) {
  std::vector<int> partner(a_arcs.size(), -1);
  std::set<int> used;
  for (std::size_t i = 0; i < a_arcs.size(); ++i) {
    int h = d.arc(a_arcs[i]).head;
    for (int f : feasible_pool) {
      if (d.arc(f).tail == h && !used.count(f)) {
        partner[i] = f;
        used.insert(f);
        break;
      }
    }
  }
  return partner;
}

// Stable partition: arcs with partners first.
void matched_first(std::vector<int>& arcs, std::vector<int>& partner) {
  std::vector<int> oa, op, ua, up;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (partner[i] >= 0) {
      oa.push_back(arcs[i]);
      op.push_back(partner[i]);
    } else {
      ua.push_back(arcs[i]);
      up.push_back(-1);
    }
  }
  oa.insert(oa.end(), ua.begin(), ua.end());
  op.insert(op.end(), up.begin(), up.end());
  arcs = std::move(oa);
  partner = std::move(op);
}

// The ring construction: set j pairs arc j with the companion of arc j+1,
// the next-to-last set wraps around to companion 0, the last arc stands
// alone. Companion j must be joined to every hub arc except possibly
// arc j, which both a matched partner and any compatible arc satisfy.
NetCertificate assemble_ring(const NetSpec& spec,
                             const std::vector<int>& arcs,
                             const std::vector<int>& partner,
                             const std::vector<int>& comp_pool) {
  int p = static_cast<int>(arcs.size());
  std::vector<int> beta(p - 1, -1);
  std::size_t next_comp = 0;
  for (int j = 0; j < p - 1; ++j) {
    if (partner[j] >= 0) {
      beta[j] = partner[j];
    } else {
      if (next_comp >= comp_pool.size()) {
        throw CaseNotCoveredError("not enough companion arcs for the ring");
      }
      beta[j] = comp_pool[next_comp++];
    }
  }
  NetCertificate net;
  net.spec = spec;
  net.case_used = 6;
  for (int j = 0; j <= p - 3; ++j) {
    net.branch_arc_sets.push_back({arcs[j], beta[j + 1]});
  }
  net.branch_arc_sets.push_back({arcs[p - 2], beta[0]});
  net.branch_arc_sets.push_back({arcs[p - 1]});
  net.singleton_set = p - 1;
  return net;
}

}  // namespace

NetCertificate build_net(const NetSpec& spec, const Digraph& d) {
  Checked pools = validate(spec, d);
  std::vector<int> arcs = spec.a_arcs;
  std::vector<int> partner = match_partners(d, arcs, pools.feasible);
  int p = static_cast<int>(arcs.size());
  int nf = static_cast<int>(std::count_if(partner.begin(), partner.end(),
                                          [](int x) { return x >= 0; }));
  int nc = static_cast<int>(pools.compatible.size());

  NetCertificate net;
  net.spec = spec;
  if (p == 1) {
    net.case_used = 1;
    net.branch_arc_sets = {{arcs[0]}};
    net.singleton_set = 0;
    return net;
  }
  if (p == 2 && nc >= 1) {
    net.case_used = 2;
    net.branch_arc_sets = {{arcs[0]}, {arcs[1], pools.compatible[0]}};
    net.singleton_set = 0;
    return net;
  }
  if (p == 3 && nf == 3) {
    net.case_used = 3;
    net.branch_arc_sets = {{arcs[0], partner[1]},
                           {arcs[1], partner[2]},
                           {arcs[2], partner[0]}};
    net.singleton_set = -1;
    return net;
  }
  if (p == 3 && nf >= 1 && nc >= 1) {
    matched_first(arcs, partner);
    net.case_used = 4;
    net.branch_arc_sets = {{arcs[0], pools.compatible[0]},
                           {arcs[1], partner[0]},
                           {arcs[2]}};
    net.singleton_set = 2;
    return net;
  }
  if (p == 3 && nc >= 2) {
    net.case_used = 5;
    net.branch_arc_sets = {{arcs[0], pools.compatible[0]},
                           {arcs[1], pools.compatible[1]},
                           {arcs[2]}};
    net.singleton_set = 2;
    return net;
  }
  if (p >= 4 && nf + nc >= p - 1) {
    matched_first(arcs, partner);
    return assemble_ring(spec, arcs, partner, pools.compatible);
  }
  throw CaseNotCoveredError(
      "no net case fits: p=" + std::to_string(p) + " feasible=" +
      std::to_string(nf) + " compatible=" + std::to_string(nc));
}

NetCertificate build_net_with_singleton(const NetSpec& spec, const Digraph& d,
                                        int singleton_arc) {
  Checked pools = validate(spec, d);
  std::vector<int> others;
  bool found = false;
  for (int id : spec.a_arcs) {
    if (id == singleton_arc) {
      found = true;
    } else {
      others.push_back(id);
    }
  }
  if (!found) {
    throw ConstructionFailedError("singleton arc is not a hub arc");
  }
  int p = static_cast<int>(spec.a_arcs.size());
  int nc = static_cast<int>(pools.compatible.size());

  NetCertificate net;
  net.spec = spec;
  if (p == 1) {
    net.case_used = 1;
    net.branch_arc_sets = {{singleton_arc}};
    net.singleton_set = 0;
    return net;
  }
  if (p == 2) {
    if (nc < 1) throw CaseNotCoveredError("pair net needs a compatible arc");
    net.case_used = 2;
    net.branch_arc_sets = {{singleton_arc}, {others[0], pools.compatible[0]}};
    net.singleton_set = 0;
    return net;
  }
  std::vector<int> partner = match_partners(d, others, pools.feasible);
  int nf = static_cast<int>(std::count_if(partner.begin(), partner.end(),
                                          [](int x) { return x >= 0; }));
  if (p == 3) {
    if (nf >= 1 && nc >= 1) {
      matched_first(others, partner);
      net.case_used = 4;
      net.branch_arc_sets = {{others[0], pools.compatible[0]},
                             {others[1], partner[0]},
                             {singleton_arc}};
      net.singleton_set = 2;
      return net;
    }
    if (nc >= 2) {
      net.case_used = 5;
      net.branch_arc_sets = {{others[0], pools.compatible[0]},
                             {others[1], pools.compatible[1]},
                             {singleton_arc}};
      net.singleton_set = 2;
      return net;
    }
    throw CaseNotCoveredError("no three-arc net leaves the chosen arc alone");
  }
  if (nf + nc < p - 1) {
    throw CaseNotCoveredError("not enough companions with the chosen arc "
                              "forced into the single slot");
  }
  matched_first(others, partner);
  others.push_back(singleton_arc);
  partner.push_back(-1);
  return assemble_ring(spec, others, partner, pools.compatible);
}

MinorCertificate tournament_minor(const Digraph& t) {
  if (!t.is_tournament()) {
    throw NotTournamentError("digraph is not a tournament");
  }
  int n = t.n();
  if (n < 5) {
    throw TooSmallError("tournament has " + std::to_string(n) +
                        " vertices, need at least 5");
  }
  auto pair_arc = [&](int a, int b) { return t.arcs_between(a, b)[0]; };
  int r = n - 1;  // ring of all vertices except the hub 0
  MinorCertificate cert;
  for (int i = 0; i < r; ++i) {
    cert.branch_sets.push_back(
        {pair_arc(0, i + 1), pair_arc((i + 1) % r + 1, (i + 2) % r + 1)});
  }
  std::set<int> skips;
  for (int i = 0; i < r; ++i) skips.insert(pair_arc(i + 1, (i + 2) % r + 1));
  cert.branch_sets.emplace_back(skips.begin(), skips.end());
  return cert;
}

namespace {

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string word;
    if (probe >> word) return true;
  }
  return false;
}

}  // namespace

// Pools are not serialized: reading back recovers the hub, the hub arcs
// (the first entry of each set) and the branch sets only.
NetCertificate read_net_certificate(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw ParseError("missing net header");
  std::istringstream head(line);
  int v = 0, na = 0, nf = 0, ncmp = 0;
  if (!(head >> v >> na >> nf >> ncmp)) {
    throw ParseError("bad net header: " + line);
  }
  NetCertificate net;
  net.spec.v = v;
  if (!next_data_line(in, line)) throw ParseError("missing set count");
  std::istringstream pc(line);
  int p = 0;
  if (!(pc >> p) || p < 0) throw ParseError("bad set count: " + line);
  for (int i = 0; i < p; ++i) {
    if (!next_data_line(in, line)) throw ParseError("missing branch set");
    std::istringstream row(line);
    std::vector<int> set;
    int id = 0;
    while (row >> id) set.push_back(id);
    if (set.empty()) throw ParseError("empty branch set line");
    net.spec.a_arcs.push_back(set[0]);
    net.branch_arc_sets.push_back(std::move(set));
    if (net.branch_arc_sets.back().size() == 1) net.singleton_set = i;
  }
  return net;
}

void write_net_certificate(std::ostream& out, const NetCertificate& net) {
  out << net.spec.v << ' ' << net.spec.a_arcs.size() << ' '
      << net.spec.feasible.size() << ' ' << net.spec.compatible.size()
      << '\n';
  out << net.branch_arc_sets.size() << '\n';
  for (const auto& set : net.branch_arc_sets) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) out << ' ';
      out << set[i];
    }
    out << '\n';
  }
}

}  // namespace x3
