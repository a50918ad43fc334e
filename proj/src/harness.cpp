#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>
#include <utility>

#include "json.hpp"

#include "x3/caps.hpp"
#include "x3/coloring.hpp"
#include "x3/errors.hpp"
#include "x3/extractor.hpp"
#include "x3/harness.hpp"
#include "x3/nets.hpp"
#include "x3/three_arc.hpp"

namespace x3 {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

int pair_count(int n) { return n * (n - 1) / 2; }

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

std::uint64_t digraph_count(int n) {
  const int p = pair_count(n);
  if (2 * p > 62)
    throw CapExceededError("digraph index space leaves 64 bits at n=" +
                           std::to_string(n));
  return std::uint64_t{1} << (2 * p);
}

Digraph digraph_from_index(int n, std::uint64_t index) {
  if (index >= digraph_count(n))
    throw CapExceededError("digraph index out of range");
  Digraph d(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const int st = static_cast<int>(index & 3);
      index >>= 2;
      if (st & 1) d.add_arc(a, b);
      if (st & 2) d.add_arc(b, a);
    }
  return d;
}

std::uint64_t digraph_to_index(const Digraph& d) {
  const int n = d.n();
  if (2 * pair_count(n) > 62)
    throw CapExceededError("digraph index space leaves 64 bits at n=" +
                           std::to_string(n));
  std::uint64_t index = 0;
  int shift = 0;
  std::uint64_t arcs_seen = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::uint64_t st = 0;
      if (d.arc_from_to(a, b) >= 0) st |= 1;
      if (d.arc_from_to(b, a) >= 0) st |= 2;
      arcs_seen += (st & 1) + (st >> 1);
      index |= st << shift;
      shift += 2;
    }
  if (arcs_seen != static_cast<std::uint64_t>(d.m()))
    throw ParseError("digraph has parallel arcs; no index exists");
  return index;
}

std::uint64_t tournament_count(int n) {
  const int p = pair_count(n);
  if (p > 62)
    throw CapExceededError("tournament index space leaves 64 bits at n=" +
                           std::to_string(n));
  return std::uint64_t{1} << p;
}

Digraph tournament_from_index(int n, std::uint64_t index) {
  if (index >= tournament_count(n))
    throw CapExceededError("tournament index out of range");
  Digraph d(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (index & 1)
        d.add_arc(b, a);
      else
        d.add_arc(a, b);
      index >>= 1;
    }
  return d;
}

std::uint64_t tournament_to_index(const Digraph& d) {
  if (!d.is_tournament())
    throw NotTournamentError("digraph is not a tournament");
  const int n = d.n();
  if (pair_count(n) > 62)
    throw CapExceededError("tournament index space leaves 64 bits at n=" +
                           std::to_string(n));
  std::uint64_t index = 0;
  int shift = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (d.arc_from_to(b, a) >= 0) index |= std::uint64_t{1} << shift;
      ++shift;
    }
  return index;
}

void enumerate_digraphs(
    int n, const std::function<void(std::uint64_t, const Digraph&)>& fn) {
  if (n > 5)
    throw CapExceededError("exhaustive digraph enumeration capped at 5 "
                           "vertices");
  const std::uint64_t total = digraph_count(n);
  for (std::uint64_t i = 0; i < total; ++i) fn(i, digraph_from_index(n, i));
}

void enumerate_tournaments(
    int n, const std::function<void(std::uint64_t, const Digraph&)>& fn) {
  if (n > 6)
    throw CapExceededError("exhaustive tournament enumeration capped at 6 "
                           "vertices");
  const std::uint64_t total = tournament_count(n);
  for (std::uint64_t i = 0; i < total; ++i)
    fn(i, tournament_from_index(n, i));
}

std::string encode_instance(const Digraph& d, bool tournament) {
  if (tournament)
    return "t" + std::to_string(d.n()) + ":" +
           std::to_string(tournament_to_index(d));
  return "d" + std::to_string(d.n()) + ":" +
         std::to_string(digraph_to_index(d));
}

Digraph decode_instance(const std::string& enc) {
  const auto colon = enc.find(':');
  if (enc.size() < 4 || colon == std::string::npos ||
      (enc[0] != 'd' && enc[0] != 't'))
    throw ParseError("malformed instance name: " + enc);
  int n = 0;
  std::uint64_t index = 0;
  try {
    n = std::stoi(enc.substr(1, colon - 1));
    index = std::stoull(enc.substr(colon + 1));
  } catch (const std::exception&) {
    throw ParseError("malformed instance name: " + enc);
  }
  return enc[0] == 't' ? tournament_from_index(n, index)
                       : digraph_from_index(n, index);
}

std::string instance_record(std::uint64_t index, const Digraph& d,
                            bool tournament) {
  ojson j;
  j["i"] = index;
  j["enc"] = encode_instance(d, tournament);
  j["n"] = d.n();
  j["m"] = d.m();
  int chi_x = -1, chi_g = -1, h = -1, k = -1;
  bool pass = false;
  std::string err;
  try {
    ThreeArcGraph x = three_arc_graph(d);
    chi_x = chromatic_number(x.graph).k;
    CollapseResult col = collapse_parallel(d);
    ReduceResult red = remove_redundant(col.digraph);
    chi_g = chromatic_number(underlying_graph(red.digraph)).k;
    ExtractionResult ext = extract_minor(d);
    k = ext.k;
    const bool cert_ok = ext.cert.order() == k &&
                         verify_certificate(x.graph, ext.cert).ok;
    HadwigerResult hr = hadwiger_number(x.graph);
    h = std::max(hr.h, k);
    pass = cert_ok && h >= chi_x && chi_x <= chi_g;
    if (tournament && d.n() >= 5) {
      MinorCertificate tm = tournament_minor(d);
      pass = pass && tm.order() == d.n() &&
             verify_certificate(x.graph, tm).ok;
    }
  } catch (const Error& e) {
    err = e.what();
    pass = false;
  }
  j["chi_x"] = chi_x;
  j["chi_g"] = chi_g;
  j["h"] = h;
  j["k"] = k;
  j["pass"] = pass;
  if (!err.empty()) j["error"] = err;
  return j.dump();
}

SweepReport sweep_verify(const SweepConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  SweepReport rep;
  {
    json echo;
    echo["n"] = cfg.n;
    echo["exhaustive"] = cfg.exhaustive;
    echo["tournaments"] = cfg.tournaments;
    echo["samples"] = cfg.exhaustive ? 0 : cfg.samples;
    echo["seed"] = cfg.exhaustive ? 0 : cfg.seed;
    rep.config_echo = echo.dump();
  }
  std::uint64_t total = 0;
  if (cfg.exhaustive) {
    if (cfg.tournaments && cfg.n > 6)
      throw CapExceededError("exhaustive tournament sweep capped at 6 "
                             "vertices");
    if (!cfg.tournaments && cfg.n > 5)
      throw CapExceededError("exhaustive digraph sweep capped at 5 vertices");
    total = cfg.tournaments ? tournament_count(cfg.n) : digraph_count(cfg.n);
  } else {
    total = cfg.samples;
  }
  rep.instance_count = total;

  std::vector<std::string> lines;
  if (!cfg.out_path.empty()) {
    std::ifstream in(cfg.out_path, std::ios::binary);
    std::string line;
    while (in && std::getline(in, line))
      if (!line.empty()) lines.push_back(line);
    bool usable = lines.size() <= total;
    for (std::size_t at = 0; usable && at < lines.size(); ++at) {
      json j = json::parse(lines[at], nullptr, false);
      usable = !j.is_discarded() && j.contains("i") &&
               j["i"].get<std::uint64_t>() == at;
    }
    if (!usable) lines.clear();
  }

  auto make_instance = [&](std::uint64_t i) {
    if (cfg.exhaustive)
      return cfg.tournaments ? tournament_from_index(cfg.n, i)
                             : digraph_from_index(cfg.n, i);
    std::mt19937_64 rng(cfg.seed ^ i);
    if (cfg.tournaments)
      return tournament_from_index(cfg.n, rng() % tournament_count(cfg.n));
    return digraph_from_index(cfg.n, rng() % digraph_count(cfg.n));
  };

  const std::uint64_t start = lines.size();
  std::vector<std::string> fresh(total - start);
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1 || fresh.size() <= 1) {
    for (std::uint64_t i = start; i < total; ++i)
      fresh[i - start] = instance_record(i, make_instance(i),
                                         cfg.tournaments);
  } else {
    std::atomic<std::uint64_t> next{start};
    auto worker = [&] {
      for (;;) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= total) break;
        fresh[i - start] = instance_record(i, make_instance(i),
                                           cfg.tournaments);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& s : fresh) lines.push_back(std::move(s));

  for (const auto& line : lines) {
    json j = json::parse(line, nullptr, false);
    if (!j.is_discarded() && j.value("pass", false)) continue;
    SweepViolation v;
    if (!j.is_discarded()) {
      v.enc = j.value("enc", std::string("?"));
      v.chi_x = j.value("chi_x", -1);
      v.h = j.value("h", -1);
    }
    v.detail = line;
    rep.violations.push_back(std::move(v));
  }
  rep.pass = rep.violations.empty();
  rep.lines = std::move(lines);
  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path, std::ios::trunc | std::ios::binary);
    for (const auto& line : rep.lines) out << line << '\n';
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Digraph random_digraph(std::mt19937_64& rng, int n) {
  return digraph_from_index(n, rng() % digraph_count(n));
}

Digraph random_tournament(std::mt19937_64& rng, int n) {
  return tournament_from_index(n, rng() % tournament_count(n));
}

Graph random_graph(std::mt19937_64& rng, int n, int density_pct) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (static_cast<int>(rng() % 100) < density_pct)
        edges.push_back({a, b});
  return build_graph(n, edges);
}

struct SuiteRunner {
  std::mt19937_64 rng;
  PropertyReport* rep;

  void run(const std::string& name, std::uint64_t iters,
           const std::function<bool(std::mt19937_64&)>& check) {
    SuiteResult sr;
    sr.name = name;
    for (std::uint64_t it = 0; it < iters; ++it) {
      bool ok = false;
      try {
        ok = check(rng);
      } catch (const Error&) {
        ok = false;
      }
      if (ok)
        ++sr.passes;
      else
        ++sr.failures;
    }
    ojson j;
    j["suite"] = sr.name;
    j["passes"] = sr.passes;
    j["failures"] = sr.failures;
    rep->lines.push_back(j.dump());
    if (sr.failures > 0) rep->pass = false;
    rep->suites.push_back(std::move(sr));
  }
};

}  // namespace

PropertyReport run_property_suites(std::uint64_t seed,
                                   std::uint64_t iterations) {
  const auto t0 = std::chrono::steady_clock::now();
  PropertyReport rep;
  {
    json echo;
    echo["iters"] = iterations;
    echo["seed"] = seed;
    rep.config_echo = echo.dump();
  }
  SuiteRunner run{std::mt19937_64(seed), &rep};
  const std::uint64_t light = std::max<std::uint64_t>(1, iterations);
  const std::uint64_t heavy = std::max<std::uint64_t>(1, iterations / 10);

  // Adjacency of the operator is symmetric, loop-free, and never joins
  // arcs sharing a tail.
  run.run("three_arc_symmetry", light, [](std::mt19937_64& rng) {
    Digraph d = random_digraph(rng, uniform(rng, 2, 6));
    if (d.m() == 0) return true;
    for (int reps = 0; reps < 8; ++reps) {
      int a = uniform(rng, 0, d.m() - 1);
      int b = uniform(rng, 0, d.m() - 1);
      if (arcs_adjacent(d, a, b) != arcs_adjacent(d, b, a)) return false;
      if (a == b && arcs_adjacent(d, a, b)) return false;
      if (d.arc(a).tail == d.arc(b).tail && arcs_adjacent(d, a, b))
        return false;
    }
    return true;
  });

  // Any net that builds is a clique minor holding exactly one branch arc
  // per set.
  run.run("net_one_arc_per_set", light, [](std::mt19937_64& rng) {
    Digraph d = random_digraph(rng, uniform(rng, 4, 7));
    int v = uniform(rng, 0, d.n() - 1);
    if (d.out_degree(v) == 0) return true;
    std::vector<int> a_arcs;
    std::vector<char> used_head(d.n(), 0);
    for (int id : d.out_arcs(v)) {
      int hd = d.arc(id).head;
      if (used_head[hd]) continue;
      used_head[hd] = 1;
      a_arcs.push_back(id);
      if (static_cast<int>(a_arcs.size()) == 3) break;
    }
    NetSpec spec = make_net_spec(d, v, a_arcs);
    NetCertificate net;
    try {
      net = build_net(spec, d);
    } catch (const CaseNotCoveredError&) {
      return true;
    }
    std::vector<char> is_a(d.m(), 0);
    for (int id : a_arcs) is_a[id] = 1;
    for (const auto& s : net.branch_arc_sets) {
      int cnt = 0;
      for (int id : s) cnt += is_a[id];
      if (cnt != 1) return false;
    }
    ThreeArcGraph x = three_arc_graph(d);
    return verify_certificate(x.graph, net.to_minor_certificate()).ok;
  });

  // The two sides of the degree-sum identity agree exactly.
  run.run("score_identity", light, [](std::mt19937_64& rng) {
    Digraph d = random_digraph(rng, uniform(rng, 1, 8));
    ScoredArcs sc = score_arcs(d);
    return sc.lhs_sum == sc.rhs_sum;
  });

  // Color-minimal cores keep the full coloring number and high minimum
  // degree.
  run.run("critical_core", heavy, [](std::mt19937_64& rng) {
    Graph g = random_graph(rng, uniform(rng, 6, 9), 55);
    int k = chromatic_number(g).k;
    if (k < 2) return true;
    CriticalSubgraph crit = critical_subgraph(g, k);
    if (chromatic_number(crit.graph).k != k) return false;
    std::vector<int> deg(crit.graph.n, 0);
    for (auto [a, b] : crit.graph.edges) {
      ++deg[a];
      ++deg[b];
    }
    for (int dg : deg)
      if (dg < k - 1) return false;
    return true;
  });

  // Tournaments of five or more vertices always yield a full-order
  // certificate.
  run.run("tournament_certificates",
          std::max<std::uint64_t>(1, iterations / 5),
          [](std::mt19937_64& rng) {
            Digraph t = random_tournament(rng, uniform(rng, 5, 8));
            MinorCertificate cert = tournament_minor(t);
            if (cert.order() != t.n()) return false;
            ThreeArcGraph x = three_arc_graph(t);
            return verify_certificate(x.graph, cert).ok;
          });

  // After orienting an induced piece of the reduced host, every vertex
  // with one arc out keeps a spare arc available.
  run.run("orientation_spares", light, [](std::mt19937_64& rng) {
    Digraph d0 = random_digraph(rng, uniform(rng, 5, 8));
    CollapseResult col = collapse_parallel(d0);
    const Digraph& d = col.digraph;
    ReduceResult red = remove_redundant(d);
    Graph g = underlying_graph(red.digraph);
    std::vector<char> keep(d.n(), 0);
    for (int v = 0; v < d.n(); ++v) keep[v] = rng() % 100 < 70;
    std::vector<std::pair<int, int>> kept;
    for (auto [a, b] : g.edges)
      if (keep[a] && keep[b]) kept.push_back({a, b});
    Graph h = build_graph(d.n(), kept);
    Orientation ori = orient_with_spare_arcs(h, d);
    return has_spare_arcs(ori.f, d);
  });

  // The extractor's order always reaches the operator image's coloring
  // number, with a verified certificate.
  run.run("extractor_bound", heavy, [](std::mt19937_64& rng) {
    Digraph d = random_digraph(rng, uniform(rng, 1, 5));
    ThreeArcGraph x = three_arc_graph(d);
    int chi_x = chromatic_number(x.graph).k;
    ExtractionResult ext = extract_minor(d);
    if (ext.k < chi_x) return false;
    if (ext.cert.order() != ext.k) return false;
    return verify_certificate(x.graph, ext.cert).ok;
  });

  // A deliberately damaged certificate is flagged with one precise
  // violation; the undamaged one still verifies.
  run.run("verifier_fault_injection",
          std::max<std::uint64_t>(1, iterations / 5),
          [](std::mt19937_64& rng) {
            Digraph d = random_digraph(rng, uniform(rng, 3, 5));
            ThreeArcGraph x = three_arc_graph(d);
            ExtractionResult ext = extract_minor(d);
            if (ext.cert.order() == 0) return true;
            if (!verify_certificate(x.graph, ext.cert).ok) return false;
            MinorCertificate bad = ext.cert;
            int mode = uniform(rng, 0, 2);
            if (mode == 0 && bad.order() < 2) mode = 2;
            Clause expect;
            if (mode == 0) {
              bad.branch_sets[1].push_back(bad.branch_sets[0][0]);
              expect = Clause::overlap;
            } else if (mode == 1) {
              bad.branch_sets[0].push_back(x.graph.n);
              expect = Clause::vertex_range;
            } else {
              bad.branch_sets[0].clear();
              expect = Clause::empty_set;
            }
            VerifyResult vr = verify_certificate(x.graph, bad);
            if (vr.ok || !vr.violation) return false;
            if (mode != 0 && vr.violation->clause != expect) return false;
            return !describe(*vr.violation).empty();
          });

  rep.elapsed_ms = ms_since(t0);
  return rep;
}

}  // namespace x3
