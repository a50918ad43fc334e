#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "x3/graph.hpp"

namespace x3 {

// Witness that a graph has a complete minor: one branch set per row.
struct MinorCertificate {
  std::vector<std::vector<int>> branch_sets;

  int order() const { return static_cast<int>(branch_sets.size()); }
};

enum class Clause {
  vertex_range,  // a listed vertex is outside 0..n-1
  empty_set,     // a branch set has no vertices
  overlap,       // two branch sets share a vertex
  disconnected,  // a branch set does not induce a connected subgraph
  not_adjacent,  // no edge joins two branch sets
};

struct Violation {
  Clause clause{};
  int set_a = -1;
  int set_b = -1;  // second set for overlap / not_adjacent, else -1
  std::string detail;
};

struct VerifyResult {
  bool ok = false;
  std::optional<Violation> violation;
};

// Checks the clauses in the order listed above, one clause across all
// sets before the next; reports the first failure at the lowest indices.
VerifyResult verify_certificate(const Graph& g, const MinorCertificate& cert);

enum class SearchStatus { found, absent, exhausted };

struct MinorSearch {
  SearchStatus status = SearchStatus::absent;
  MinorCertificate cert;  // populated when status == found
  std::uint64_t nodes = 0;
};

// Decides whether g has a complete minor of the given order. A node
// budget of 0 means unlimited; a positive budget may end the search
// early with status exhausted.
MinorSearch find_clique_minor(const Graph& g, int order,
                              std::uint64_t node_budget = 0);

// Largest clique, exact. Deterministic tie-breaking.
std::vector<int> max_clique(const Graph& g);

// Merge-based heuristic giving a complete minor of some order; never
// fails, order may be far from optimal.
MinorCertificate greedy_clique_minor(const Graph& g);

struct HadwigerResult {
  int h = 0;
  MinorCertificate cert;
  bool exact = true;  // false when the size cap forced a heuristic bound
};

// Largest order of a complete minor. Exact up to the hadwiger cap;
// beyond it, a heuristic lower bound with exact=false.
HadwigerResult hadwiger_number(const Graph& g);

// Text format: first line "p", then one line of vertex ids per set.
MinorCertificate read_certificate(std::istream& in);
void write_certificate(std::ostream& out, const MinorCertificate& cert);

std::string describe(const Violation& v);

}  // namespace x3
