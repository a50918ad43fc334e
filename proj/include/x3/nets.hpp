#pragma once

#include <iosfwd>
#include <vector>

#include "x3/graph.hpp"
#include "x3/minors.hpp"

namespace x3 {

// Input to the net builder: a hub vertex v, a set A of arcs leaving v,
// and the pools of partner arcs the builder may draw from. Pools may be
// restricted subsets of everything available in the digraph.
struct NetSpec {
  int v = -1;
  std::vector<int> a_arcs;      // arc ids leaving v, distinct heads
  std::vector<int> feasible;    // feasible arcs, no two sharing a tail
  std::vector<int> compatible;  // compatible arcs
};

// Relative to (v, A): an arc xy is feasible when some arc of A runs from
// v to x and y != v; it is then joined to every A-arc except those into
// x. An arc xy is compatible when y != v, x is joined to v, and no A-arc
// runs into x; it is then joined to every A-arc.
struct ArcClasses {
  std::vector<int> feasible;    // all feasible arc ids, ascending
  std::vector<int> compatible;  // all compatible arc ids, ascending
};

ArcClasses classify_arcs(const Digraph& d, int v,
                         const std::vector<int>& a_arcs);

bool arc_feasible(const Digraph& d, int v, const std::vector<int>& a_arcs,
                  int arc);
bool arc_compatible(const Digraph& d, int v, const std::vector<int>& a_arcs,
                    int arc);

// NetSpec with the full feasible / compatible pools.
NetSpec make_net_spec(const Digraph& d, int v, const std::vector<int>& a_arcs);

// A net: |A| branch sets over the three-arc graph's vertices (arc ids),
// one per A-arc, pairwise joined, each containing its A-arc.
struct NetCertificate {
  NetSpec spec;
  std::vector<std::vector<int>> branch_arc_sets;
  int case_used = 0;      // which construction case applied, 1..6
  int singleton_set = -1;  // index of the single-arc branch set, -1 if none

  MinorCertificate to_minor_certificate() const {
    return MinorCertificate{branch_arc_sets};
  }
};

// Builds a net from the spec, choosing the first construction case whose
// requirements the pools meet. Throws CaseNotCoveredError when none fits
// and ConstructionFailedError on malformed pools.
NetCertificate build_net(const NetSpec& spec, const Digraph& d);

// Variant that forces the given A-arc into the single-arc branch set.
// Throws CaseNotCoveredError when no case leaves that arc alone.
NetCertificate build_net_with_singleton(const NetSpec& spec, const Digraph& d,
                                        int singleton_arc);

// For a tournament on n >= 5 vertices: a complete minor of order n in its
// three-arc graph, built from a hub vertex and a cyclic ring. Throws
// NotTournamentError / TooSmallError.
MinorCertificate tournament_minor(const Digraph& t);

// Text format: header "v |A| |Af| |Ac|", then the branch sets as a
// certificate block.
NetCertificate read_net_certificate(std::istream& in);
void write_net_certificate(std::ostream& out, const NetCertificate& net);

}  // namespace x3
