#pragma once
// Hand-built digraphs that steer the net builder and the split dispatcher
// into specific construction cases. Unit tests pin the outcomes; the
// acceptance run re-randomizes the net specs in bulk.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "x3/graph.hpp"
#include "x3/nets.hpp"

namespace fixtures {

using ArcList = std::vector<std::pair<int, int>>;

struct NetFixture {
  x3::Digraph d;
  x3::NetSpec spec;
};

inline int rnd(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(
                                   hi - lo + 1));
}

// Canonical hub layout: vertex 0 is the hub, heads 1..p carry the A-arcs,
// partners and companions take fresh vertices. A random relabeling then
// hides the layout; arc ids survive it because they index the arc list.
inline NetFixture net_case_fixture(std::mt19937_64& rng, int which) {
  ArcList arcs;
  std::vector<int> a_ids, f_ids, c_ids;
  int p = 0, nf = 0, nc = 0;
  switch (which) {
    case 1: p = 1; break;
    case 2: p = 2; nc = 1 + rnd(rng, 0, 1); break;
    case 3: p = 3; nf = 3; break;
    case 4: p = 3; nf = 1 + rnd(rng, 0, 1); nc = 1 + rnd(rng, 0, 1); break;
    case 5: p = 3; nc = 2 + rnd(rng, 0, 1); break;
    default:
      p = rnd(rng, 4, 7);
      nf = rnd(rng, 0, p);
      nc = std::max(0, p - 1 - nf) + rnd(rng, 0, 1);
      break;
  }
  int next = p + 1;
  for (int h = 1; h <= p; ++h) {
    a_ids.push_back(static_cast<int>(arcs.size()));
    arcs.push_back({0, h});
  }
  std::vector<int> heads(p);
  std::iota(heads.begin(), heads.end(), 1);
  std::shuffle(heads.begin(), heads.end(), rng);
  for (int l = 0; l < nf; ++l) {
    f_ids.push_back(static_cast<int>(arcs.size()));
    arcs.push_back({heads[l], next++});
  }
  for (int l = 0; l < nc; ++l) {
    int tail = next++;
    c_ids.push_back(static_cast<int>(arcs.size()));
    arcs.push_back({tail, next++});
    if (rng() % 2)
      arcs.push_back({0, tail});
    else
      arcs.push_back({tail, 0});
  }
  int n = next;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  ArcList mapped;
  mapped.reserve(arcs.size());
  for (auto [a, b] : arcs) mapped.push_back({perm[a], perm[b]});
  NetFixture fx{x3::build_digraph(n, mapped),
                x3::NetSpec{perm[0], a_ids, f_ids, c_ids}};
  return fx;
}

// A host digraph, its oriented core, and the hub pair for the split
// dispatcher, together with the label the layout must reach. Core arcs
// come first in the host so the continuation choices stay predictable.
struct SplitFixture {
  std::string name;
  x3::Digraph d;
  x3::Digraph f;
  int k = 7;
  int u = 0;
  int v = 1;
  std::string label;
  bool prefix = false;      // label is only a prefix of the reported one
  bool expect_cert = true;  // a certificate of order k must come back
};

inline SplitFixture make_split(std::string name, int n, ArcList core,
                               ArcList extra, std::string label,
                               bool prefix = false, bool expect_cert = true) {
  ArcList all = core;
  all.insert(all.end(), extra.begin(), extra.end());
  SplitFixture fx;
  fx.name = std::move(name);
  fx.d = x3::build_digraph(n, all);
  fx.f = x3::build_digraph(n, core);
  fx.label = std::move(label);
  fx.prefix = prefix;
  fx.expect_cert = expect_cert;
  return fx;
}

// One fixture per dispatcher outcome at order 7. Hub pair is always
// (0, 1): out-fans set the score, shared out-neighbours with a single
// escape arc force collisions, and every other neighbour keeps a fresh
// continuation so the stars can close.
inline std::vector<SplitFixture> all_split_fixtures() {
  std::vector<SplitFixture> out;

  // outdeg(u) reaches the order: the fan at u alone carries the net.
  out.push_back(make_split(
      "wide_out_fan", 15,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}},
      {{1, 8}, {2, 9}, {3, 10}, {4, 11}, {5, 12}, {6, 13}, {7, 14}},
      "wide_out_fan"));

  // surplus, outdeg(v) = k: full fan at v plus one arc beside u.
  out.push_back(make_split(
      "surplus_full_fan", 16,
      {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}},
      {{2, 9}, {3, 10}, {4, 11}, {5, 12}, {6, 13}, {7, 14}, {8, 15}},
      "surplus_full_fan"));

  // surplus, all k-2 neighbours shared with single escapes: ring closure.
  out.push_back(make_split(
      "surplus_overlap_max", 12,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
       {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}},
      {{2, 7}, {3, 8}, {4, 9}, {5, 10}, {6, 11}},
      "surplus_overlap_max"));

  // surplus, four shared tails plus one private neighbour on each side.
  out.push_back(make_split(
      "surplus_overlap_high", 14,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
       {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 7}},
      {{2, 8}, {3, 9}, {4, 10}, {5, 11}, {6, 12}, {7, 13}},
      "surplus_overlap_high"));

  // surplus, two shared tails; v's star leans on its in-neighbours.
  out.push_back(make_split(
      "surplus_overlap_low", 16,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
       {1, 2}, {1, 3}, {1, 6}, {7, 1}, {8, 1}},
      {{2, 9}, {3, 10}, {4, 11}, {5, 12}, {6, 13}, {7, 14}, {8, 15}},
      "surplus_overlap_low"));

  // surplus, disjoint fans: both stars close on fresh continuations.
  out.push_back(make_split(
      "surplus_overlap_low_t0", 16,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}, {1, 7}, {1, 8}},
      {{2, 9}, {3, 10}, {4, 11}, {5, 12}, {6, 13}, {7, 14}, {8, 15}},
      "surplus_overlap_low"));

  // surplus, one shared tail with outdeg(v) = k-2: the pair-and-companion
  // star beside u, the full fan beside v.
  out.push_back(make_split(
      "surplus_overlap_low_jk2", 16,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4},
       {1, 2}, {1, 5}, {1, 6}, {1, 7}, {1, 8}},
      {{2, 9}, {3, 10}, {4, 11}, {5, 12}, {6, 13}, {7, 14}, {8, 15}},
      "surplus_overlap_low"));

  // tight, outdeg(v) = 1: v contributes its fan arc plus a spare arc.
  out.push_back(make_split(
      "tight_single_out", 17,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 7}, {8, 1}},
      {{1, 9}, {7, 10}, {8, 11}, {2, 12}, {3, 13}, {4, 14}, {5, 15},
       {6, 16}},
      "tight_single_out"));

  // tight, outdeg(v) = k-1: u contributes only a spare arc.
  out.push_back(make_split(
      "tight_wide_fan", 15,
      {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}},
      {{0, 8}, {2, 9}, {3, 10}, {4, 11}, {5, 12}, {6, 13}, {7, 14}},
      "tight_wide_fan"));

  // tight, outdeg(v) = k-2 with a second arc into v: anchored directly.
  out.push_back(make_split(
      "tight_lone_arc", 16,
      {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {8, 1},
       {2, 8}},
      {{2, 9}, {3, 10}, {4, 11}, {5, 12}, {6, 14}, {7, 13}, {8, 15},
       {8, 0}},
      "tight_lone_arc"));

  // tight, outdeg(v) = k-2 and v's only in-arc is uv: the hub pair moves
  // one step down the fan and the dispatcher recurses.
  out.push_back(make_split(
      "tight_lone_arc_sub", 20,
      {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {3, 8},
       {3, 9}, {10, 3}, {7, 10}},
      {{2, 11}, {4, 12}, {5, 13}, {6, 14}, {7, 15}, {8, 16}, {9, 17},
       {10, 18}, {10, 19}},
      "tight_lone_arc>", true));

  // tight anchored, two collisions: their escape arcs anchor the split.
  out.push_back(make_split(
      "tight_overlap2", 14,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5}, {6, 0},
       {7, 1}},
      {{2, 8}, {3, 9}, {4, 10}, {5, 11}, {6, 12}, {7, 13}},
      "tight_overlap2"));

  // tight anchored, a common in-neighbour: its arcs anchor the split.
  out.push_back(make_split(
      "tight_common_in", 16,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}, {8, 0},
       {8, 1}},
      {{8, 9}, {2, 10}, {3, 11}, {4, 12}, {5, 13}, {6, 14}, {7, 15}},
      "tight_common_in"));

  // tight anchored, two independent common out-neighbours: bundle anchor.
  out.push_back(make_split(
      "tight_common_out", 14,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5}, {12, 1}},
      {{2, 6}, {2, 7}, {3, 8}, {3, 9}, {4, 10}, {5, 11}, {12, 13}},
      "tight_common_out"));

  // tight anchored, no common neighbours: a two-vertex path from u's fan
  // to an in-neighbour of v carries the anchor.
  out.push_back(make_split(
      "tight_path_anchor", 18,
      {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {8, 1},
       {3, 8}, {9, 0}},
      {{2, 10}, {3, 11}, {4, 12}, {5, 13}, {6, 14}, {7, 15}, {8, 16},
       {9, 17}},
      "tight_path_anchor"));

  // fan score below k-1: the dispatcher reports and gives up.
  out.push_back(make_split("low_score", 3, {{0, 1}}, {{1, 2}, {0, 2}},
                           "low-S", false, false));

  return out;
}

}  // namespace fixtures
