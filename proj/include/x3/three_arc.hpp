#pragma once

#include "x3/graph.hpp"

namespace x3 {

// The three-arc graph of a digraph D: one vertex per arc of D, with arc
// ids reused as vertex ids. Vertices for arcs uv and xy are joined when
// the four vertices trace a directed-middle walk: the arcs are distinct,
// v != x, y != u, and some arc of D joins u and x.
struct ThreeArcGraph {
  Graph graph;
};

// True when the arcs with ids a and b are joined in the three-arc graph.
bool arcs_adjacent(const Digraph& d, int a, int b);

// Same test on explicit arcs plus the host digraph for the u~x check.
bool arcs_adjacent(const Digraph& d, const Arc& a, const Arc& b);

ThreeArcGraph three_arc_graph(const Digraph& d);

}  // namespace x3
