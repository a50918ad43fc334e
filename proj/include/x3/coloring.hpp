#pragma once

#include <optional>
#include <vector>

#include "x3/graph.hpp"
#include "x3/three_arc.hpp"

namespace x3 {

struct Coloring {
  std::vector<int> colors;  // per vertex, values in 0..k-1
  int k = 0;                // number of colors used
};

bool is_proper(const Graph& g, const std::vector<int>& colors);

// Largest clique found by a deterministic greedy pass; a lower bound.
std::vector<int> greedy_clique(const Graph& g);

// Saturation-guided greedy coloring; an upper bound on the chromatic number.
Coloring greedy_coloring(const Graph& g);

// Proper coloring with at most k colors, if one exists. Exact search.
std::optional<Coloring> color_with(const Graph& g, int k);

// Exact chromatic number with witness coloring. Throws CapExceededError
// when g has more vertices than the chi cap.
Coloring chromatic_number(const Graph& g);

// Chromatic number of the three-arc graph of d, with the coloring
// indexed by arc id.
Coloring three_arc_chromatic_index(const Digraph& d);

// Colors every arc of d by its tail's color in c, a proper coloring of
// underlying_graph(reduced). `reduced` must share d's vertex set.
// Throws ImproperColoringError if c is not proper on that graph.
std::vector<int> lift_coloring(const Digraph& d, const Digraph& reduced,
                               const std::vector<int>& c);

struct CriticalSubgraph {
  std::vector<int> vertices;  // ids in the host graph, ascending
  Graph graph;                // induced on `vertices`, ids remapped
  int k = 0;
};

// A subgraph with chromatic number k from which no vertex or edge can be
// removed without dropping below k. Throws ChromaticMismatchError when
// chromatic_number(g).k != k.
CriticalSubgraph critical_subgraph(const Graph& g, int k);

}  // namespace x3
