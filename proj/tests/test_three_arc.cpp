#include <random>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "x3/graph.hpp"
#include "x3/three_arc.hpp"

using namespace x3;

TEST_CASE("arc adjacency follows the four-vertex walk test") {
  // head of one arc feeding into the tail of the other: rejected
  Digraph path = build_digraph(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(arcs_adjacent(path, 0, 1));

  // bi-oriented triangle a,b,c: arcs ab and cb are joined
  Digraph k3 = biorient(oracle::complete_graph(3));
  int ab = k3.arc_from_to(0, 1);
  int cb = k3.arc_from_to(2, 1);
  CHECK(arcs_adjacent(k3, ab, cb));

  // directed 3-cycle: arcs ab and ca close up, head of ca is a's tail
  Digraph cyc = build_digraph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(arcs_adjacent(cyc, 0, 2));
}

TEST_CASE("bi-oriented triangle yields a perfect matching") {
  Digraph k3 = biorient(oracle::complete_graph(3));
  ThreeArcGraph x = three_arc_graph(k3);
  CHECK(x.graph.n == 6);
  // arc ids: 0=01, 1=10, 2=02, 3=20, 4=12, 5=21
  std::vector<std::pair<int, int>> want{{0, 5}, {1, 3}, {2, 4}};
  CHECK(x.graph.edges == want);
}

TEST_CASE("directed path gives isolated vertices") {
  ThreeArcGraph x = three_arc_graph(build_digraph(3, {{0, 1}, {1, 2}}));
  CHECK(x.graph.n == 2);
  CHECK(x.graph.m() == 0);
}

TEST_CASE("bi-oriented K4 is 4-regular on 12 vertices") {
  ThreeArcGraph x = three_arc_graph(biorient(oracle::complete_graph(4)));
  CHECK(x.graph.n == 12);
  CHECK(x.graph.m() == 24);
  for (int v = 0; v < x.graph.n; ++v)
    CHECK(x.graph.adj[v].size() == 4);
}

TEST_CASE("construction matches the walk-enumeration oracle on all small graphs") {
  for (int n = 1; n <= 5; ++n) {
    int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      std::vector<std::pair<int, int>> edges;
      int bit = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++bit)
          if (mask >> bit & 1) edges.push_back({a, b});
      Graph g = build_graph(n, edges);
      ThreeArcGraph x = three_arc_graph(biorient(g));
      std::set<std::pair<int, int>> got(x.graph.edges.begin(),
                                        x.graph.edges.end());
      CHECK(got == oracle::three_arc_edges(g));
    }
  }
}

TEST_CASE("arcs sharing a tail are never joined") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 50; ++it) {
    Digraph d = oracle::random_digraph(rng, oracle::uniform(rng, 2, 7));
    ThreeArcGraph x = three_arc_graph(d);
    for (auto [a, b] : x.graph.edges)
      CHECK(d.arc(a).tail != d.arc(b).tail);
  }
}

TEST_CASE("vertex degree matches the local counting formula") {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 50; ++it) {
    Digraph d = collapse_parallel(
                    oracle::random_digraph(rng, oracle::uniform(rng, 2, 7)))
                    .digraph;
    ThreeArcGraph x = three_arc_graph(d);
    for (int id = 0; id < d.m(); ++id) {
      const Arc& uv = d.arc(id);
      int count = 0;
      for (int other = 0; other < d.m(); ++other) {
        const Arc& xy = d.arc(other);
        if (xy.tail == uv.tail || xy.tail == uv.head) continue;
        if (!d.adjacent(uv.tail, xy.tail)) continue;
        if (xy.head == uv.tail) continue;
        ++count;
      }
      CHECK(static_cast<int>(x.graph.adj[id].size()) == count);
    }
  }
}

TEST_CASE("parallel arcs become distinct non-adjacent vertices") {
  Digraph d = build_digraph(3, {{0, 1}, {0, 1}, {1, 2}});
  ThreeArcGraph x = three_arc_graph(d);
  CHECK(x.graph.n == 3);
  CHECK_FALSE(x.graph.has_edge(0, 1));
}
