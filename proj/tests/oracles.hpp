#pragma once

// Independent reference implementations used as test oracles. Everything
// here is written against the definitions directly, with no calls into
// the library code paths under test, so agreement is meaningful.

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "x3/graph.hpp"

namespace oracle {

// Edge set of the three-arc graph of biorient(g), built by enumerating
// vertex 4-tuples (v,u,x,y) where (v,u,x) and (u,x,y) are paths of g
// (v=y allowed). The tuple joins the arc u->v to the arc x->y. Arc ids
// follow the biorient convention: edge e yields ids 2e (lo,hi) and
// 2e+1 (hi,lo).
inline std::set<std::pair<int, int>> three_arc_edges(const x3::Graph& g) {
  auto arc_id = [&](int tail, int head) {
    for (int e = 0; e < g.m(); ++e) {
      auto [a, b] = g.edges[e];
      if (a == tail && b == head) return 2 * e;
      if (a == head && b == tail) return 2 * e + 1;
    }
    return -1;
  };
  std::set<std::pair<int, int>> edges;
  for (int v = 0; v < g.n; ++v)
    for (int u = 0; u < g.n; ++u)
      for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) {
          if (!g.has_edge(v, u) || !g.has_edge(u, x) || !g.has_edge(x, y))
            continue;
          if (v == x || u == y) continue;
          int a = arc_id(u, v);
          int b = arc_id(x, y);
          if (a == b) continue;
          edges.insert({std::min(a, b), std::max(a, b)});
        }
  return edges;
}

inline bool proper(const x3::Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.n) return false;
  for (auto [a, b] : g.edges)
    if (colors[a] == colors[b]) return false;
  return true;
}

// Smallest k admitting a proper coloring, by direct backtracking over
// color assignments. Only for small n.
inline int chromatic(const x3::Graph& g) {
  if (g.n == 0) return 0;
  std::vector<int> colors(g.n, -1);
  auto fits = [&](int v, int c) {
    for (int w : g.adj[v])
      if (colors[w] == c) return false;
    return true;
  };
  auto search = [&](auto&& self, int v, int k) -> bool {
    if (v == g.n) return true;
    for (int c = 0; c < k; ++c) {
      if (!fits(v, c)) continue;
      colors[v] = c;
      if (self(self, v + 1, k)) return true;
      colors[v] = -1;
    }
    return false;
  };
  for (int k = 1;; ++k) {
    std::fill(colors.begin(), colors.end(), -1);
    if (search(search, 0, k)) return k;
  }
}

// Whether g has a complete minor of the given order, by assigning every
// vertex to one of the p branch sets or to none and checking the branch
// set conditions directly. Exponential; only for tiny graphs.
inline bool has_clique_minor(const x3::Graph& g, int p) {
  if (p <= 0) return true;
  if (p > g.n) return false;
  std::vector<int> part(g.n, -1);
  auto connected = [&](int s) {
    std::vector<int> members;
    for (int v = 0; v < g.n; ++v)
      if (part[v] == s) members.push_back(v);
    if (members.empty()) return false;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{members[0]};
    seen[members[0]] = 1;
    int reached = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++reached;
      for (int w : g.adj[v])
        if (part[w] == s && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    return reached == static_cast<int>(members.size());
  };
  auto joined = [&](int s1, int s2) {
    for (auto [a, b] : g.edges) {
      if (part[a] == s1 && part[b] == s2) return true;
      if (part[a] == s2 && part[b] == s1) return true;
    }
    return false;
  };
  auto ok = [&]() {
    for (int s = 0; s < p; ++s)
      if (!connected(s)) return false;
    for (int s1 = 0; s1 < p; ++s1)
      for (int s2 = s1 + 1; s2 < p; ++s2)
        if (!joined(s1, s2)) return false;
    return true;
  };
  auto assign = [&](auto&& self, int v) -> bool {
    if (v == g.n) return ok();
    for (int s = -1; s < p; ++s) {
      part[v] = s;
      if (self(self, v + 1)) return true;
    }
    part[v] = -1;
    return false;
  };
  return assign(assign, 0);
}

inline int hadwiger(const x3::Graph& g) {
  int h = 0;
  while (has_clique_minor(g, h + 1)) ++h;
  return h;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo +
         static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

// percent in 0..100: chance of each ordered pair carrying an arc.
inline x3::Digraph random_digraph(std::mt19937_64& rng, int n,
                                  int percent = 35) {
  std::vector<std::pair<int, int>> arcs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (static_cast<int>(rng() % 100) < percent) arcs.push_back({a, b});
    }
  return x3::build_digraph(n, arcs);
}

inline x3::Graph random_graph(std::mt19937_64& rng, int n, int percent = 50) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (static_cast<int>(rng() % 100) < percent) edges.push_back({a, b});
  return x3::build_graph(n, edges);
}

inline x3::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  return x3::build_graph(n, edges);
}

inline x3::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return x3::build_graph(n, edges);
}

// The join of a cycle C_a and a complete core K_b: chromatic number
// 3 + b, vertex-critical, not complete. Cycle vertices come first.
inline x3::Graph cycle_join_complete(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < a; ++v) edges.push_back({v, (v + 1) % a});
  for (int v = a; v < a + b; ++v)
    for (int w = v + 1; w < a + b; ++w) edges.push_back({v, w});
  for (int v = 0; v < a; ++v)
    for (int w = a; w < a + b; ++w) edges.push_back({v, w});
  return x3::build_graph(a + b, edges);
}

}  // namespace oracle
