#include "x3/coloring.hpp"

#include <algorithm>

#include "x3/caps.hpp"
#include "x3/errors.hpp"

namespace x3 {

bool is_proper(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.n) return false;
  for (int v = 0; v < g.n; ++v) {
    if (colors[v] < 0) return false;
  }
  for (auto [u, v] : g.edges) {
    if (colors[u] == colors[v]) return false;
  }
  return true;
}

std::vector<int> greedy_clique(const Graph& g) {
  std::vector<int> order(g.n);
  for (int v = 0; v < g.n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto da = g.adj[a].size(), db = g.adj[b].size();
    return da != db ? da > db : a < b;
  });
  std::vector<int> best;
  for (int start : order) {
    std::vector<int> clique{start};
    for (int cand : order) {
      if (cand == start) continue;
      bool ok = true;
      for (int w : clique) {
        if (!g.has_edge(cand, w)) {
          ok = false;
          break;
        }
      }
      if (ok) clique.push_back(cand);
    }
    if (clique.size() > best.size()) best = clique;
  }
  std::sort(best.begin(), best.end());
  return best;
}

namespace {

// Saturation-guided search state shared by the greedy pass and the exact
// decision procedure.
struct SatState {
  const Graph& g;
  std::vector<int> colors;
  std::vector<std::vector<int>> nbr_color;  // per vertex, per color: count
  std::vector<int> sat;                     // distinct neighbor colors
  int colored = 0;

  SatState(const Graph& g_, int color_slots)
      : g(g_),
        colors(g_.n, -1),
        nbr_color(g_.n, std::vector<int>(color_slots, 0)),
        sat(g_.n, 0) {}

  // Uncolored vertex with max saturation, tie max degree, tie lowest id.
  int pick() const {
    int best = -1;
    for (int v = 0; v < g.n; ++v) {
      if (colors[v] >= 0) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      if (sat[v] != sat[best]) {
        if (sat[v] > sat[best]) best = v;
      } else if (g.adj[v].size() > g.adj[best].size()) {
        best = v;
      }
    }
    return best;
  }

  void assign(int v, int c) {
    colors[v] = c;
    ++colored;
    for (int w : g.adj[v]) {
      if (nbr_color[w][c]++ == 0) ++sat[w];
    }
  }

  void unassign(int v, int c) {
    colors[v] = -1;
    --colored;
    for (int w : g.adj[v]) {
      if (--nbr_color[w][c] == 0) --sat[w];
    }
  }
};

bool decide(SatState& s, int k, int max_used) {
  if (s.colored == s.g.n) return true;
  int v = s.pick();
  int limit = std::min(k - 1, max_used + 1);
  for (int c = 0; c <= limit; ++c) {
    if (s.nbr_color[v][c] > 0) continue;
    s.assign(v, c);
    if (decide(s, k, std::max(max_used, c))) return true;
    s.unassign(v, c);
  }
  return false;
}

}  // namespace

Coloring greedy_coloring(const Graph& g) {
  if (g.n == 0) return {};
  SatState s(g, g.n);
  int max_used = -1;
  while (s.colored < g.n) {
    int v = s.pick();
    int c = 0;
    while (s.nbr_color[v][c] > 0) ++c;
    s.assign(v, c);
    max_used = std::max(max_used, c);
  }
  return {s.colors, max_used + 1};
}

std::optional<Coloring> color_with(const Graph& g, int k) {
  if (g.n == 0) return Coloring{};
  if (k <= 0) return std::nullopt;
  SatState s(g, std::min(k, g.n));
  int slots = std::min(k, g.n);
  if (!decide(s, slots, -1)) return std::nullopt;
  int used = *std::max_element(s.colors.begin(), s.colors.end()) + 1;
  return Coloring{s.colors, used};
}

Coloring chromatic_number(const Graph& g) {
  if (g.n > caps().chi) {
    throw CapExceededError("graph has " + std::to_string(g.n) +
                           " vertices, chi cap is " +
                           std::to_string(caps().chi));
  }
  if (g.n == 0) return {};
  int lb = static_cast<int>(greedy_clique(g).size());
  Coloring ub = greedy_coloring(g);
  for (int t = lb; t < ub.k; ++t) {
    if (auto c = color_with(g, t)) return *c;
  }
  return ub;
}

Coloring three_arc_chromatic_index(const Digraph& d) {
  return chromatic_number(three_arc_graph(d).graph);
}

std::vector<int> lift_coloring(const Digraph& d, const Digraph& reduced,
                               const std::vector<int>& c) {
  Graph g = underlying_graph(reduced);
  if (!is_proper(g, c)) {
    throw ImproperColoringError(
        "coloring is not proper on the reduced digraph's underlying graph");
  }
  std::vector<int> lifted(d.m());
  for (int id = 0; id < d.m(); ++id) lifted[id] = c[d.arc(id).tail];
  return lifted;
}

namespace {

// True when the graph on `vertices` with `edges` (host ids) admits a
// proper coloring with fewer than k colors.
bool drops_below(const std::vector<int>& vertices,
                 const std::vector<std::pair<int, int>>& edges, int host_n,
                 int k) {
  std::vector<int> index(host_n, -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    index[vertices[i]] = i;
  }
  std::vector<std::pair<int, int>> local;
  for (auto [u, v] : edges) local.emplace_back(index[u], index[v]);
  Graph g = build_graph(static_cast<int>(vertices.size()), local);
  return color_with(g, k - 1).has_value();
}

}  // namespace

CriticalSubgraph critical_subgraph(const Graph& g, int k) {
  if (chromatic_number(g).k != k) {
    throw ChromaticMismatchError("graph is not " + std::to_string(k) +
                                 "-chromatic");
  }
  std::vector<int> verts(g.n);
  for (int v = 0; v < g.n; ++v) verts[v] = v;
  std::vector<std::pair<int, int>> edges = g.edges;

  // Deleting a vertex or edge keeps the chromatic number at k exactly
  // when the remainder is not (k-1)-colorable. A rejected deletion stays
  // rejected under further deletions, so one pass per phase suffices; a
  // final vertex pass clears vertices isolated by the edge phase.
  auto vertex_pass = [&] {
    for (std::size_t i = 0; i < verts.size();) {
      int v = verts[i];
      std::vector<int> rest;
      for (int w : verts) {
        if (w != v) rest.push_back(w);
      }
      std::vector<std::pair<int, int>> rest_edges;
      for (auto [a, b] : edges) {
        if (a != v && b != v) rest_edges.emplace_back(a, b);
      }
      if (!drops_below(rest, rest_edges, g.n, k)) {
        verts = std::move(rest);
        edges = std::move(rest_edges);
      } else {
        ++i;
      }
    }
  };
  vertex_pass();
  for (std::size_t i = 0; i < edges.size();) {
    std::vector<std::pair<int, int>> rest = edges;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (!drops_below(verts, rest, g.n, k)) {
      edges = std::move(rest);
    } else {
      ++i;
    }
  }
  vertex_pass();

  CriticalSubgraph result;
  result.vertices = verts;
  result.k = k;
  std::vector<int> index(g.n, -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    index[verts[i]] = i;
  }
  std::vector<std::pair<int, int>> local;
  for (auto [u, v] : edges) local.emplace_back(index[u], index[v]);
  result.graph = build_graph(static_cast<int>(verts.size()), local);
  return result;
}

}  // namespace x3
