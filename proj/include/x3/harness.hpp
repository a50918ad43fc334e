#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "x3/graph.hpp"
#include "x3/minors.hpp"

namespace x3 {

// Enumeration of labeled loop-free simple digraphs on n vertices: each
// unordered pair {a,b} (pairs in lexicographic order) independently
// holds one of four states (0 none, 1 low->high, 2 high->low, 3 both),
// read as a base-4 odometer with pair 0 in the least significant digit.

// 4^(n(n-1)/2); throws CapExceededError once the index space leaves 64
// bits (n >= 9).
std::uint64_t digraph_count(int n);
Digraph digraph_from_index(int n, std::uint64_t index);
// Inverse of digraph_from_index on its image (parallel arcs rejected).
std::uint64_t digraph_to_index(const Digraph& d);

// Tournaments on the same pair order: bit 0 means low->high.
std::uint64_t tournament_count(int n);
Digraph tournament_from_index(int n, std::uint64_t index);
std::uint64_t tournament_to_index(const Digraph& d);

// Visit all labeled digraphs (n <= 5) or tournaments (n <= 6) in index
// order. Throws CapExceededError above those sizes.
void enumerate_digraphs(int n,
                        const std::function<void(std::uint64_t,
                                                 const Digraph&)>& fn);
void enumerate_tournaments(int n,
                           const std::function<void(std::uint64_t,
                                                    const Digraph&)>& fn);

// Compact reversible instance name, "d<n>:<index>" or "t<n>:<index>".
std::string encode_instance(const Digraph& d, bool tournament);
Digraph decode_instance(const std::string& enc);

struct SweepConfig {
  int n = 4;
  bool exhaustive = true;
  bool tournaments = false;     // sweep tournaments instead of digraphs
  std::uint64_t samples = 0;    // used when exhaustive is false
  std::uint64_t seed = 0;
  int jobs = 1;                 // execution detail; never echoed
  std::string out_path;         // empty: keep the report in memory only
};

struct SweepViolation {
  std::string enc;
  int chi_x = 0;
  int h = 0;
  MinorCertificate cert;
  std::string detail;
};

struct SweepReport {
  std::uint64_t instance_count = 0;
  std::vector<SweepViolation> violations;
  bool pass = true;             // pass iff violations is empty
  std::string config_echo;      // canonical JSON; excludes jobs and paths
  std::vector<std::string> lines;  // one JSON record per instance
  double elapsed_ms = 0;        // informational; never persisted
};

// One instance record as a single-line JSON object with fixed key order:
// i, enc, n, m, chi_x, chi_g, h, k, pass. chi_x is exact; h is the best
// certified order (exact when the graph is small enough, otherwise the
// extractor's result); k is the extractor's order. pass requires
// h >= chi_x and chi_x <= chi_g, plus a full-order verified certificate
// on tournament instances of five or more vertices.
std::string instance_record(std::uint64_t index, const Digraph& d,
                            bool tournament);

// Runs the configured family through instance_record, in index order.
// With an out_path, existing well-formed lines are kept verbatim and the
// sweep resumes after them; jobs only parallelize the remaining work and
// never change the bytes produced.
SweepReport sweep_verify(const SweepConfig& cfg);

struct SuiteResult {
  std::string name;
  std::uint64_t passes = 0;
  std::uint64_t failures = 0;
};

struct PropertyReport {
  std::vector<SuiteResult> suites;
  bool pass = true;
  std::string config_echo;
  std::vector<std::string> lines;  // one JSON record per suite
  double elapsed_ms = 0;
};

// Randomized invariant suites over the whole library, seeded and
// reproducible: operator symmetry, net construction, score identity,
// critical cores, tournament certificates, orientation spares, the
// extractor bound, and verifier fault injection.
PropertyReport run_property_suites(std::uint64_t seed,
                                   std::uint64_t iterations);

}  // namespace x3
