#include "x3/minors.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "x3/caps.hpp"
#include "x3/coloring.hpp"
#include "x3/errors.hpp"

namespace x3 {

namespace {

bool set_connected(const Graph& g, const std::vector<int>& set) {
  if (set.empty()) return false;
  std::vector<char> member(g.n, 0);
  for (int v : set) member[v] = 1;
  std::vector<int> stack{set[0]};
  std::vector<char> seen(g.n, 0);
  seen[set[0]] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.adj[v]) {
      if (member[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == static_cast<int>(set.size());
}

bool sets_adjacent(const Graph& g, const std::vector<int>& a,
                   const std::vector<int>& b) {
  for (int u : a) {
    for (int v : b) {
      if (g.has_edge(u, v)) return true;
    }
  }
  return false;
}

}  // namespace

VerifyResult verify_certificate(const Graph& g, const MinorCertificate& cert) {
  const auto& sets = cert.branch_sets;
  int p = cert.order();
  for (int i = 0; i < p; ++i) {
    for (int v : sets[i]) {
      if (v < 0 || v >= g.n) {
        return {false,
                Violation{Clause::vertex_range, i, -1,
                          "set " + std::to_string(i) + " lists vertex " +
                              std::to_string(v) + " outside 0.." +
                              std::to_string(g.n - 1)}};
      }
    }
  }
  for (int i = 0; i < p; ++i) {
    if (sets[i].empty()) {
      return {false, Violation{Clause::empty_set, i, -1,
                               "set " + std::to_string(i) + " is empty"}};
    }
  }
  std::vector<int> owner(g.n, -1);
  for (int i = 0; i < p; ++i) {
    for (int v : sets[i]) {
      if (owner[v] >= 0 && owner[v] != i) {
        return {false,
                Violation{Clause::overlap, owner[v], i,
                          "sets " + std::to_string(owner[v]) + " and " +
                              std::to_string(i) + " share vertex " +
                              std::to_string(v)}};
      }
      if (owner[v] == i) {
        return {false, Violation{Clause::overlap, i, i,
                                 "set " + std::to_string(i) +
                                     " repeats vertex " + std::to_string(v)}};
      }
      owner[v] = i;
    }
  }
  for (int i = 0; i < p; ++i) {
    if (!set_connected(g, sets[i])) {
      return {false,
              Violation{Clause::disconnected, i, -1,
                        "set " + std::to_string(i) + " is not connected"}};
    }
  }
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (!sets_adjacent(g, sets[i], sets[j])) {
        return {false, Violation{Clause::not_adjacent, i, j,
                                 "sets " + std::to_string(i) + " and " +
                                     std::to_string(j) +
                                     " have no joining edge"}};
      }
    }
  }
  return {true, std::nullopt};
}

std::string describe(const Violation& v) { return v.detail; }

namespace {

// Depth-first search for `order` disjoint connected branch sets, pairwise
// joined by edges. Sets are anchored: the lowest vertex that is neither
// placed nor discarded either joins the next set or is discarded, so each
// family of sets is visited once.
struct MinorDfs {
  const Graph& g;
  int order;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<int> owner;  // -1 free, -2 discarded, else set index
  std::vector<std::vector<int>> sets;
  int free_count;

  MinorDfs(const Graph& g_, int order_, std::uint64_t budget_)
      : g(g_), order(order_), budget(budget_), owner(g_.n, -1),
        free_count(g_.n) {}

  bool tick() {
    ++nodes;
    if (budget > 0 && nodes > budget) {
      exhausted = true;
      return false;
    }
    return true;
  }

  bool place() {
    if (exhausted) return false;
    if (!tick()) return false;
    int built = static_cast<int>(sets.size());
    if (built == order) return true;
    if (free_count < order - built) return false;
    int anchor = 0;
    while (owner[anchor] != -1) ++anchor;

    // grow a new set from the anchor
    std::vector<int> set{anchor};
    owner[anchor] = built;
    --free_count;
    std::vector<char> touched(built, 0);
    int n_touched = 0;
    for (int i = 0; i < built; ++i) {
      if (sets_adjacent(g, set, sets[i])) {
        touched[i] = 1;
        ++n_touched;
      }
    }
    std::vector<int> ext;
    for (int w : g.adj[anchor]) {
      if (owner[w] == -1) ext.push_back(w);
    }
    std::vector<char> banned(g.n, 0);
    if (grow(set, ext, banned, touched, n_touched)) return true;
    owner[anchor] = -1;
    ++free_count;

    // or discard the anchor
    if (free_count - 1 < order - built) return false;
    owner[anchor] = -2;
    --free_count;
    bool ok = place();
    if (!ok) {
      owner[anchor] = -1;
      ++free_count;
    }
    return ok;
  }

  // Enumerates connected supersets of `set` within the free vertices,
  // each exactly once, closing the set whenever it touches every
  // earlier set.
  bool grow(std::vector<int>& set, const std::vector<int>& ext,
            std::vector<char>& banned, std::vector<char>& touched,
            int n_touched) {
    if (exhausted) return false;
    if (!tick()) return false;
    int built = static_cast<int>(sets.size());
    if (n_touched == built) {
      sets.push_back(set);
      if (place()) return true;
      sets.pop_back();
      if (exhausted) return false;
    }
    // each future set needs at least one free vertex
    if (free_count < order - built - 1 + 1) return false;
    std::vector<int> newly_banned;
    for (std::size_t i = 0; i < ext.size(); ++i) {
      int u = ext[i];
      if (owner[u] != -1) continue;  // stale candidate
      owner[u] = built;
      --free_count;
      set.push_back(u);
      std::vector<char> child_touched = touched;
      int child_n = n_touched;
      for (int s = 0; s < built; ++s) {
        if (!child_touched[s] &&
            sets_adjacent(g, std::vector<int>{u}, sets[s])) {
          child_touched[s] = 1;
          ++child_n;
        }
      }
      std::vector<int> child_ext(ext.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                 ext.end());
      std::vector<int> added;
      for (int w : g.adj[u]) {
        if (owner[w] == -1 && !banned[w]) {
          bool dup = false;
          for (int e : child_ext) {
            if (e == w) {
              dup = true;
              break;
            }
          }
          if (!dup) {
            child_ext.push_back(w);
            added.push_back(w);
          }
        }
      }
      bool ok = grow(set, child_ext, banned, child_touched, child_n);
      set.pop_back();
      owner[u] = -1;
      ++free_count;
      if (ok) return true;
      if (exhausted) return false;
      banned[u] = 1;
      newly_banned.push_back(u);
    }
    for (int u : newly_banned) banned[u] = 0;
    return false;
  }
};

}  // namespace

MinorSearch find_clique_minor(const Graph& g, int order,
                              std::uint64_t node_budget) {
  MinorSearch r;
  if (order <= 0) {
    r.status = SearchStatus::found;
    return r;
  }
  if (g.n < order) {
    r.status = SearchStatus::absent;
    return r;
  }
  if (order == 1) {
    r.status = SearchStatus::found;
    r.cert.branch_sets = {{0}};
    return r;
  }
  long long need = static_cast<long long>(order) * (order - 1) / 2;
  if (static_cast<long long>(g.m()) < need) {
    r.status = SearchStatus::absent;
    return r;
  }
  std::vector<int> clique = greedy_clique(g);
  if (static_cast<int>(clique.size()) >= order) {
    r.status = SearchStatus::found;
    for (int i = 0; i < order; ++i) r.cert.branch_sets.push_back({clique[i]});
    return r;
  }
  MinorDfs dfs(g, order, node_budget);
  bool found = dfs.place();
  r.nodes = dfs.nodes;
  if (found) {
    r.status = SearchStatus::found;
    r.cert.branch_sets = dfs.sets;
  } else if (dfs.exhausted) {
    r.status = SearchStatus::exhausted;
  } else {
    r.status = SearchStatus::absent;
  }
  return r;
}

namespace {

void expand_clique(const Graph& g, std::vector<int>& cur,
                   std::vector<int>& cand, std::vector<int>& best) {
  if (cur.size() + cand.size() <= best.size()) return;
  if (cand.empty()) {
    best = cur;
    return;
  }
  while (!cand.empty()) {
    if (cur.size() + cand.size() <= best.size()) return;
    int v = cand.front();
    cand.erase(cand.begin());
    std::vector<int> next;
    for (int w : cand) {
      if (g.has_edge(v, w)) next.push_back(w);
    }
    cur.push_back(v);
    expand_clique(g, cur, next, best);
    cur.pop_back();
  }
}

}  // namespace

std::vector<int> max_clique(const Graph& g) {
  std::vector<int> best = greedy_clique(g);
  std::vector<int> cur;
  std::vector<int> cand(g.n);
  for (int v = 0; v < g.n; ++v) cand[v] = v;
  expand_clique(g, cur, cand, best);
  std::sort(best.begin(), best.end());
  return best;
}

MinorCertificate greedy_clique_minor(const Graph& g) {
  MinorCertificate merged;
  std::vector<std::vector<int>> sets;
  for (int v = 0; v < g.n; ++v) sets.push_back({v});
  for (;;) {
    int p = static_cast<int>(sets.size());
    std::vector<std::vector<char>> adj(p, std::vector<char>(p, 0));
    bool all = true;
    for (int i = 0; i < p; ++i) {
      for (int j = i + 1; j < p; ++j) {
        adj[i][j] = adj[j][i] = sets_adjacent(g, sets[i], sets[j]) ? 1 : 0;
        if (!adj[i][j]) all = false;
      }
    }
    if (all || p <= 1) break;
    int worst = 0;
    int worst_deg = p;
    for (int i = 0; i < p; ++i) {
      int deg = 0;
      for (int j = 0; j < p; ++j) deg += adj[i][j];
      if (deg < worst_deg) {
        worst_deg = deg;
        worst = i;
      }
    }
    if (worst_deg == 0) {
      sets.erase(sets.begin() + worst);
      continue;
    }
    int target = -1;
    for (int j = 0; j < p; ++j) {
      if (j != worst && adj[worst][j]) {
        target = j;
        break;
      }
    }
    sets[target].insert(sets[target].end(), sets[worst].begin(),
                        sets[worst].end());
    std::sort(sets[target].begin(), sets[target].end());
    sets.erase(sets.begin() + worst);
  }
  merged.branch_sets = sets;

  MinorCertificate from_clique;
  for (int v : greedy_clique(g)) from_clique.branch_sets.push_back({v});
  return from_clique.order() > merged.order() ? from_clique : merged;
}

HadwigerResult hadwiger_number(const Graph& g) {
  HadwigerResult r;
  if (g.n == 0) return r;
  if (g.n > caps().hadwiger) {
    r.cert = greedy_clique_minor(g);
    r.h = r.cert.order();
    r.exact = false;
    return r;
  }
  std::vector<int> clique = max_clique(g);
  r.h = static_cast<int>(clique.size());
  for (int v : clique) r.cert.branch_sets.push_back({v});
  for (int t = r.h + 1; t <= g.n; ++t) {
    MinorSearch s = find_clique_minor(g, t, 0);
    if (s.status != SearchStatus::found) break;
    r.h = t;
    r.cert = s.cert;
  }
  return r;
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

MinorCertificate read_certificate(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw ParseError("missing set count line");
  std::istringstream head(line);
  int p = 0;
  if (!(head >> p) || p < 0) throw ParseError("bad set count line: " + line);
  MinorCertificate cert;
  for (int i = 0; i < p; ++i) {
    if (!next_data_line(in, line)) {
      throw ParseError("expected " + std::to_string(p) + " sets, got " +
                       std::to_string(i));
    }
    std::istringstream row(line);
    std::vector<int> set;
    int v = 0;
    while (row >> v) set.push_back(v);
    cert.branch_sets.push_back(std::move(set));
  }
  return cert;
}

void write_certificate(std::ostream& out, const MinorCertificate& cert) {
  out << cert.order() << '\n';
  for (const auto& set : cert.branch_sets) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) out << ' ';
      out << set[i];
    }
    out << '\n';
  }
}

}  // namespace x3
