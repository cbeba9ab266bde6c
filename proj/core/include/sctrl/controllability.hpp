#pragma once

#include <optional>

#include "sctrl/graph.hpp"

namespace sctrl {

struct ControllabilityVerdict {
    bool controllable = false;
    VertexSet inaccessible;                    // empty iff accessibility holds
    std::optional<VertexSet> dilation_witness;  // minimal S with |N^-(S)| < |S|
};

struct DilationCheck {
    bool dilation_free = false;
    std::optional<VertexSet> witness;
};

/// Lin's criterion: controllable iff every vertex is accessible from the
/// roots and G(A,B) has no dilation. The dilation side is decided by whether
/// the input-augmented bipartite graph admits a matching saturating all
/// right vertices (Hall); on failure a minimal deficient set is extracted
/// from alternating-path reachability.
ControllabilityVerdict is_structurally_controllable(const Digraph& g, const RootSet& r);

/// Dilation condition alone: true iff no S disjoint from r with
/// |N^-(S)| < |S|, in-neighbours counted in G(A,B).
DilationCheck dilation_free(const Digraph& g, const RootSet& r);

struct InputConfiguration {
    RootSet roots;                // from_unmatched | from_source_sccs
    VertexSet from_unmatched;     // U(M) of the chosen maximum matching
    VertexSet from_source_sccs;   // one representative per uncovered source SCC
};

/// Minimal dedicated input configuration: U(M) plus one representative per
/// source SCC not already hit. The maximum matching is re-chosen (by
/// augmenting through per-source-SCC slack vertices) so that unmatched
/// vertices land in as many source SCCs as possible, which makes the
/// result minimal over all dedicated configurations.
InputConfiguration dedicated_input_configuration(const Digraph& g);

}  // namespace sctrl
