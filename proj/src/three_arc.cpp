#include "x3/three_arc.hpp"

namespace x3 {

bool arcs_adjacent(const Digraph& d, const Arc& a, const Arc& b) {
  // equal-valued arcs (the same arc, or parallel copies) are never joined:
  // their tails coincide and loops are excluded
  if (a == b) return false;
  if (a.head == b.tail) return false;  // head of one may not be tail of the other
  if (b.head == a.tail) return false;
  if (a.tail == b.tail) return false;
  return d.adjacent(a.tail, b.tail);
}

bool arcs_adjacent(const Digraph& d, int a, int b) {
  if (a == b) return false;
  return arcs_adjacent(d, d.arc(a), d.arc(b));
}

ThreeArcGraph three_arc_graph(const Digraph& d) {
  std::vector<std::pair<int, int>> edges;
  // For each adjacent vertex pair {u, x}, pair up arcs leaving u with
  // arcs leaving x; only the head tests remain to be checked.
  for (int u = 0; u < d.n(); ++u) {
    for (int x = u + 1; x < d.n(); ++x) {
      if (!d.adjacent(u, x)) continue;
      for (int a : d.out_arcs(u)) {
        if (d.arc(a).head == x) continue;  // v != x
        for (int b : d.out_arcs(x)) {
          if (d.arc(b).head == u) continue;  // y != u
          edges.emplace_back(a, b);
        }
      }
    }
  }
  ThreeArcGraph x;
  x.graph = build_graph(d.m(), edges);
  return x;
}

}  // namespace x3
