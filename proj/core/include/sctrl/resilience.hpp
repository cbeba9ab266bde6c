#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sctrl/controllability.hpp"
#include "sctrl/graph.hpp"

namespace sctrl {

enum class WitnessKind { source_scc, dilation_set };

/// Failure evidence for a single critical edge. witness_x is a source SCC of
/// g - e with no root; witness_s is a minimal deficient set disjoint from the
/// roots. A dilation set lying wholly inside the inaccessible region is
/// already explained by witness_x and is not reported separately.
struct CriticalEdgeReport {
    Edge edge;
    WitnessKind witness_kind = WitnessKind::source_scc;
    std::optional<VertexSet> witness_x;
    std::optional<VertexSet> witness_s;
};

/// Every edge whose single deletion breaks structural controllability
/// w.r.t. r, in ascending (from, to) order. Precondition: (g, r) is
/// structurally controllable.
std::vector<CriticalEdgeReport> critical_edge_scan(const Digraph& g, const RootSet& r);

/// Witnesses for one critical edge; throws if e is not critical.
CriticalEdgeReport failure_witness(const Digraph& g, const RootSet& r, const Edge& e);

/// True iff every removal of fewer than k non-root edges leaves (g, r)
/// structurally controllable. Monotone in the removed edge set, so only
/// (k-1)-subsets are tested. k beyond the brute-force bound is an error.
bool is_k_edge_controllable(const Digraph& g, const RootSet& r, int k,
                            int brute_force_bound = 2);

struct EdgeControllabilityIndex {
    int value = 0;           // smallest breaking removal size, or max_k
    bool lower_bound = false;  // true: no break found, index >= value

    std::string to_string() const;
};

/// Exhaustive index computation over non-root edge removals of size
/// 1..max_k-1; reports ">= max_k" when none of them breaks controllability.
EdgeControllabilityIndex edge_controllability_index(const Digraph& g, const RootSet& r,
                                                    int max_k = 3);

struct CriticalSet {
    VertexSet members;
    VertexSet in_neighborhood;  // state in-neighbours
    int input_in_count = 0;     // dedicated inputs of root members
};

struct CriticalSetScan {
    std::vector<CriticalSet> sets;
    bool complete = true;  // false when the enumeration cap was hit
};

/// All S with |S| <= max_size satisfying |S| = |N^-(S)| even after removal
/// of any single edge from N^-(S) into S. N^- is taken in G(A,B) when an
/// ambient root set is supplied (root members gain their input in-neighbour).
CriticalSetScan critical_sets(const Digraph& g, const RootSet* ambient_roots,
                              int max_size = 12);

struct ResilienceVerdict {
    bool pass = false;
    bool base_controllable = false;
    std::vector<Edge> violations;  // ascending
};

/// Independent oracle: deletes every (by default non-root) edge in turn and
/// re-runs the full controllability check.
ResilienceVerdict verify_single_edge_resilience(const Digraph& g, const RootSet& r,
                                                bool include_root_edges = false);

}  // namespace sctrl
