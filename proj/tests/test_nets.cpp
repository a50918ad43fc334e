#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "x3/errors.hpp"
#include "x3/graph.hpp"
#include "x3/minors.hpp"
#include "x3/nets.hpp"
#include "x3/three_arc.hpp"

using namespace x3;

namespace {

// d with hub 0, A-arcs 0..2 to heads 1..3, a partner behind each head,
// and one companion behind in-neighbour 6.
Digraph star_host() {
  return build_digraph(7, {{0, 1},
                           {0, 2},
                           {0, 3},
                           {1, 4},
                           {2, 5},
                           {3, 6},
                           {6, 0},
                           {6, 5}});
}

// Every branch set holds exactly one A-arc and the sets form a complete
// minor in the three-arc graph, with the pools drawn from at most once.
void check_net(const Digraph& d, const NetSpec& spec,
               const NetCertificate& net) {
  REQUIRE(net.branch_arc_sets.size() == spec.a_arcs.size());
  std::vector<int> seen;
  for (size_t s = 0; s < net.branch_arc_sets.size(); ++s) {
    const auto& set = net.branch_arc_sets[s];
    int a_count = 0;
    for (int id : set) {
      for (int a : spec.a_arcs) a_count += id == a;
      seen.push_back(id);
    }
    CHECK(a_count == 1);
    if (static_cast<int>(set.size()) == 1)
      CHECK(static_cast<int>(s) == net.singleton_set);
  }
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  Graph x = three_arc_graph(d).graph;
  CHECK(verify_certificate(x, net.to_minor_certificate()).ok);
}

}  // namespace

TEST_CASE("classify_arcs splits the pools around a hub") {
  Digraph d = star_host();
  ArcClasses cls = classify_arcs(d, 0, {0, 1, 2});
  CHECK(cls.feasible == std::vector<int>{3, 4, 5});
  // (6,0) points back at the hub; only (6,5) survives as a companion
  CHECK(cls.compatible == std::vector<int>{7});

  CHECK(arc_feasible(d, 0, {0, 1, 2}, 3));
  CHECK_FALSE(arc_feasible(d, 0, {0, 1, 2}, 7));
  CHECK(arc_compatible(d, 0, {0, 1, 2}, 7));
  CHECK_FALSE(arc_compatible(d, 0, {0, 1, 2}, 6));
  CHECK_FALSE(arc_compatible(d, 0, {0, 1, 2}, 3));
}

TEST_CASE("classify_arcs rejects arcs running into the hub") {
  Digraph d = build_digraph(4, {{0, 1}, {0, 2}, {1, 0}, {1, 3}});
  ArcClasses cls = classify_arcs(d, 0, {0, 1});
  // (1,0) has the hub as head: neither pool may take it
  CHECK(cls.feasible == std::vector<int>{3});
  CHECK(cls.compatible.empty());
}

TEST_CASE("make_net_spec keeps one partner per tail") {
  Digraph d = build_digraph(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
  NetSpec spec = make_net_spec(d, 0, {0, 1});
  CHECK(spec.v == 0);
  CHECK(spec.a_arcs == std::vector<int>{0, 1});
  // (1,3) and (1,4) share a tail; only the lower id stays
  CHECK(spec.feasible == std::vector<int>{2, 4});
  CHECK(spec.compatible.empty());
}

TEST_CASE("build_net closes the three-partner rotation") {
  Digraph d = star_host();
  NetCertificate net = build_net(NetSpec{0, {0, 1, 2}, {3, 4, 5}, {}}, d);
  CHECK(net.case_used == 3);
  CHECK(net.singleton_set == -1);
  CHECK(net.branch_arc_sets ==
        std::vector<std::vector<int>>{{0, 4}, {1, 5}, {2, 3}});
  check_net(d, net.spec, net);
}

TEST_CASE("build_net rings four arcs with two partners and a companion") {
  Digraph d = build_digraph(9, {{0, 1},
                                {0, 2},
                                {0, 3},
                                {0, 4},
                                {1, 5},
                                {2, 6},
                                {7, 0},
                                {7, 8}});
  NetSpec spec{0, {0, 1, 2, 3}, {4, 5}, {7}};
  NetCertificate net = build_net(spec, d);
  CHECK(net.case_used == 6);
  CHECK(net.singleton_set == 3);
  CHECK(net.branch_arc_sets ==
        std::vector<std::vector<int>>{{0, 5}, {1, 7}, {2, 4}, {3}});
  check_net(d, spec, net);
  Graph x = three_arc_graph(d).graph;
  CHECK(oracle::has_clique_minor(x, 4));
}

TEST_CASE("build_net refuses pools below every case") {
  Digraph pair = build_digraph(3, {{0, 1}, {0, 2}});
  CHECK_THROWS_AS(build_net(NetSpec{0, {0, 1}, {}, {}}, pair),
                  CaseNotCoveredError);

  Digraph d = star_host();
  CHECK_THROWS_AS(build_net(NetSpec{0, {0, 1, 2}, {3, 4}, {}}, d),
                  CaseNotCoveredError);

  Digraph ring = build_digraph(9, {{0, 1},
                                   {0, 2},
                                   {0, 3},
                                   {0, 4},
                                   {1, 5},
                                   {2, 6},
                                   {7, 0},
                                   {7, 8}});
  CHECK_THROWS_AS(build_net(NetSpec{0, {0, 1, 2, 3}, {4, 5}, {}}, ring),
                  CaseNotCoveredError);
}

TEST_CASE("build_net_with_singleton pins the single slot") {
  Digraph d = build_digraph(9, {{0, 1},
                                {0, 2},
                                {0, 3},
                                {0, 4},
                                {1, 5},
                                {2, 6},
                                {7, 0},
                                {7, 8}});
  NetSpec spec{0, {0, 1, 2, 3}, {4, 5}, {7}};
  for (int forced : {2, 3}) {
    NetCertificate net = build_net_with_singleton(spec, d, forced);
    CHECK(net.case_used == 6);
    REQUIRE(net.singleton_set >= 0);
    CHECK(net.branch_arc_sets[net.singleton_set] ==
          std::vector<int>{forced});
    check_net(d, spec, net);
  }
  // forcing a matched arc into the single slot starves the ring
  CHECK_THROWS_AS(build_net_with_singleton(spec, d, 0), CaseNotCoveredError);
  CHECK_THROWS_AS(build_net_with_singleton(spec, d, 5),
                  ConstructionFailedError);
}

TEST_CASE("random specs land in their own construction case") {
  std::mt19937_64 rng(4242);
  for (int which = 1; which <= 6; ++which) {
    for (int it = 0; it < 60; ++it) {
      fixtures::NetFixture fx = fixtures::net_case_fixture(rng, which);
      NetCertificate net = build_net(fx.spec, fx.d);
      CHECK(net.case_used == which);
      check_net(fx.d, fx.spec, net);
    }
  }
}

TEST_CASE("pool membership matches pairwise joins in the three-arc graph") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 80; ++it) {
    Digraph d0 = oracle::random_digraph(rng, oracle::uniform(rng, 4, 7), 45);
    CollapseResult col = collapse_parallel(d0);
    const Digraph& d = col.digraph;
    int v = -1;
    for (int c = 0; c < d.n(); ++c)
      if (!d.out_arcs(c).empty()) v = c;
    if (v < 0) continue;
    std::vector<int> a_arcs = d.out_arcs(v);
    ArcClasses cls = classify_arcs(d, v, a_arcs);
    for (int id : cls.feasible) {
      int tail = d.arc(id).tail;
      for (int a : a_arcs) {
        bool into_tail = d.arc(a).head == tail;
        // joined to every A-arc except those into its own tail
        CHECK(arcs_adjacent(d, a, id) == !into_tail);
      }
    }
    for (int id : cls.compatible)
      for (int a : a_arcs) CHECK(arcs_adjacent(d, a, id));
  }
}

TEST_CASE("tournament_minor rings a five-player cycle") {
  Digraph t5 = build_digraph(5, {{0, 1},
                                 {0, 2},
                                 {1, 2},
                                 {1, 3},
                                 {2, 3},
                                 {2, 4},
                                 {3, 4},
                                 {3, 0},
                                 {4, 0},
                                 {4, 1}});
  REQUIRE(t5.is_tournament());
  MinorCertificate cert = tournament_minor(t5);
  CHECK(cert.order() == 5);
  Graph x = three_arc_graph(t5).graph;
  CHECK(verify_certificate(x, cert).ok);
}

TEST_CASE("tournament_minor rejects small and incomplete inputs") {
  Digraph t4 = build_digraph(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(tournament_minor(t4), TooSmallError);

  Digraph gap = build_digraph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK_THROWS_AS(tournament_minor(gap), NotTournamentError);
}

TEST_CASE("tournament_minor covers every five-vertex tournament") {
  for (int mask = 0; mask < 1024; ++mask) {
    std::vector<std::pair<int, int>> arcs;
    int bit = 0;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b, ++bit)
        arcs.push_back(mask >> bit & 1 ? std::make_pair(b, a)
                                       : std::make_pair(a, b));
    Digraph t = build_digraph(5, arcs);
    MinorCertificate cert = tournament_minor(t);
    REQUIRE(cert.order() == 5);
    Graph x = three_arc_graph(t).graph;
    CHECK(verify_certificate(x, cert).ok);
  }
}

TEST_CASE("net certificates survive the text round-trip") {
  Digraph d = star_host();
  NetCertificate net = build_net(NetSpec{0, {0, 1, 2}, {3, 4, 5}, {}}, d);
  std::stringstream ss;
  write_net_certificate(ss, net);
  NetCertificate back = read_net_certificate(ss);
  // the text form keeps what verification needs: the hub, the sets, and
  // which set is the singleton; pool lists survive only as header counts
  CHECK(back.spec.v == net.spec.v);
  CHECK(back.spec.a_arcs == net.spec.a_arcs);
  CHECK(back.branch_arc_sets == net.branch_arc_sets);
  CHECK(back.singleton_set == net.singleton_set);
  CHECK(back.to_minor_certificate().branch_sets ==
        net.to_minor_certificate().branch_sets);
}
