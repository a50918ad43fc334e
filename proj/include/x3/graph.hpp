#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace x3 {

// Arcs are stored by id; the id is the position in Digraph::arcs().
struct Arc {
  int tail = -1;
  int head = -1;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// A finite digraph on vertices 0..n-1. Parallel arcs are allowed
// (several arcs may share the same tail and head); loops are not.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  int n() const { return n_; }
  int m() const { return static_cast<int>(arcs_.size()); }

  // Appends an arc and returns its id. Throws LoopArcError on tail==head.
  int add_arc(int tail, int head);

  const Arc& arc(int id) const { return arcs_[id]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // Arc ids leaving / entering v, in insertion order.
  const std::vector<int>& out_arcs(int v) const { return out_[v]; }
  const std::vector<int>& in_arcs(int v) const { return in_[v]; }

  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

  // Arc ids with tail u and head v, in insertion order.
  std::vector<int> arcs_from_to(int u, int v) const;

  // Lowest arc id with tail u and head v, or -1.
  int arc_from_to(int u, int v) const { return fromto_[u * n_ + v]; }

  // Arc ids between u and v in either direction.
  std::vector<int> arcs_between(int u, int v) const;

  // True when at least one arc joins u and v (either direction).
  bool adjacent(int u, int v) const {
    return fromto_[u * n_ + v] >= 0 || fromto_[v * n_ + u] >= 0;
  }

  bool has_arc(int u, int v) const { return fromto_[u * n_ + v] >= 0; }

  // Distinct heads of arcs leaving v, ascending.
  std::vector<int> out_neighbors(int v) const;
  // Distinct tails of arcs entering v, ascending.
  std::vector<int> in_neighbors(int v) const;
  // Distinct vertices joined to v by an arc in either direction, ascending.
  std::vector<int> neighbors(int v) const;

  // No two arcs share (tail, head).
  bool is_simple() const;
  // Exactly one arc between each unordered vertex pair.
  bool is_tournament() const;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<int> fromto_;  // n*n table of lowest arc id, -1 if none
};

Digraph build_digraph(int n, const std::vector<std::pair<int, int>>& arcs);

// A finite simple undirected graph on vertices 0..n-1.
// Edges are normalized to tail<head, sorted, and deduplicated.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  bool has_edge(int u, int v) const;
  int m() const { return static_cast<int>(edges.size()); }
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Both orientations of every edge; edge e yields arcs 2e (u,v) and 2e+1 (v,u).
Digraph biorient(const Graph& g);

// The simple graph joining u,v whenever some arc joins them in d.
Graph underlying_graph(const Digraph& d);

// True when all arcs leaving u, or all arcs leaving v, run between u and v.
// Defined for adjacent pairs; such a pair contributes no adjacencies in the
// three-arc graph beyond those its neighbors already provide.
bool pair_redundant(const Digraph& d, int u, int v);

struct CollapseResult {
  Digraph digraph;           // one arc kept per (tail, head) class
  std::vector<int> arc_map;  // old arc id -> new arc id (representative)
  std::vector<int> rep;      // new arc id -> lowest old arc id in its class
};

// Collapses parallel arcs with equal tail and head to their lowest-id
// representative. Vertex set is unchanged.
CollapseResult collapse_parallel(const Digraph& d);

struct ReduceResult {
  Digraph digraph;          // arcs of d whose underlying pair is not redundant
  std::vector<int> kept;    // new arc id -> old arc id
  std::vector<int> old_to_new;  // old arc id -> new arc id, -1 if dropped
};

// Drops every arc whose endpoint pair is redundant. Vertex set unchanged.
ReduceResult remove_redundant(const Digraph& d);

// Subgraph on the same vertex set containing the listed arc ids (in the
// given order); `kept` in the result maps new arc ids back.
struct ArcSubgraph {
  Digraph digraph;
  std::vector<int> kept;
};
ArcSubgraph subdigraph_by_arcs(const Digraph& d, const std::vector<int>& ids);

// Induced subgraph of g on the listed vertices (ids are remapped to
// 0..k-1 in list order).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Text format: first line "n m", then one "tail head" line per arc.
// '#' starts a comment; blank lines are skipped.
Digraph read_digraph(std::istream& in);
void write_digraph(std::ostream& out, const Digraph& d);
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

std::string to_dot(const Digraph& d);
std::string to_dot(const Graph& g);

}  // namespace x3
