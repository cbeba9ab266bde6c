#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sctrl/resilience.hpp"

namespace sctrl {

/// One subgraph description: a vertex subset plus the lines spanning it.
/// Each line {u, v} stands for whichever of u->v and v->u exist in the
/// parent digraph (both for bidirectional pairs).
struct SubgraphSpec {
    VertexSet vertices;
    std::vector<std::pair<Vertex, Vertex>> lines;
};

struct Subgraph {
    Digraph graph;   // vertex identifiers of the parent graph
    RootSet roots;   // ambient roots restricted to this subgraph
    bool max_out_degree_ok = false;  // Delta+ <= 2 certified
};

struct Decomposition {
    std::vector<Subgraph> subgraphs;
    VertexSet covered;
};

/// Validates user-supplied subgraphs: vertex-disjoint, edges present in g,
/// each structurally controllable w.r.t. r restricted to it, Delta+ <= 2.
Decomposition decompose(const Digraph& g, const RootSet& r,
                        const std::vector<SubgraphSpec>& specs);

/// Heuristic decomposition: matching-successor chains grown from each root,
/// then single-in-edge attachments while controllability and Delta+ <= 2
/// survive. Uncovered vertices are left for the augmentation step.
Decomposition decompose_auto(const Digraph& g, const RootSet& r);

struct WitnessFamily {
    struct Entry {
        VertexSet members;
        std::vector<Edge> from_edges;  // critical edges producing this set
        bool x_kind = true;            // false: dilation set S_e
    };
    std::vector<Entry> sets;  // deduplicated by members
};

/// Algorithm 1 over the decomposition: critical edges per subgraph and their
/// X_e sets; S_e sets are added only for subgraphs without the Delta+ <= 2
/// certificate.
WitnessFamily collect_witnesses(const Decomposition& d, const RootSet& r);

struct CoverPick {
    Vertex vertex;
    std::vector<int> covered;  // universe indices newly covered
};

struct CoverInstance {
    int universe_size = 0;
    std::vector<CoverPick> picks;  // in greedy order
    VertexSet chosen;
};

/// Greedy set cover over the witness family: repeatedly the non-root vertex
/// covering the most uncovered indices, ties to the smallest identifier.
CoverInstance cover_additional_roots(const WitnessFamily& w, const RootSet& r);

struct AugmentResult {
    bool accepted = false;
    std::string violated_condition;  // "a", "b", or "resilience" when rejected
    VertexSet offending_set;         // deficient set behind a (b)/resilience rejection
    std::optional<Digraph> grown;
};

/// Guarded vertex addition: condition (a) at least two in-neighbours in the
/// current graph, condition (b) for every critical set S, two in-neighbours
/// outside N^-(S) whenever the in-neighbourhoods meet. The two conditions
/// alone miss sets that become tight after one deletion, so acceptance also
/// requires the grown graph to pass the exhaustive single-edge check
/// ("resilience" rejection otherwise). Precondition (current 2-edge
/// controllable w.r.t. roots) is verified, not assumed.
AugmentResult augment_vertex(const Digraph& current, const RootSet& roots, Vertex z,
                             const EdgeList& incoming, const EdgeList& outgoing,
                             bool paranoid = false);

/// Edge addition under Remark "adding an edge preserves 2-edge
/// controllability"; paranoid re-runs the exhaustive oracle.
Digraph add_edges(const Digraph& current, const RootSet& roots, const EdgeList& extra,
                  bool paranoid = false);

struct AugmentStep {
    Vertex vertex = 0;
    bool promoted_root = false;  // fallback when the conditions reject
    EdgeList incoming, outgoing;
};

struct SynthesisResult {
    RootSet initial_roots, additional_roots, final_roots;
    std::vector<CriticalEdgeReport> critical_edges;  // scan behind the cover
    CoverInstance cover;
    std::vector<AugmentStep> augmentation_log;
    ResilienceVerdict verification;  // recomputed on the full graph
    bool whole_graph_fallback = false;
};

/// The two-step procedure end to end: decompose, collect witnesses, cover,
/// augment the remaining vertices, restore the remaining edges, verify.
/// Falls back to whole-graph iteration (scan g directly, cover X and S
/// witnesses, repeat) whenever the structured route cannot verify.
SynthesisResult synthesize(const Digraph& g, std::optional<RootSet> r = {},
                           std::optional<std::vector<SubgraphSpec>> decomposition = {},
                           bool paranoid = false);

}  // namespace sctrl
