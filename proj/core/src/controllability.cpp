#include "sctrl/controllability.hpp"

#include <algorithm>
#include <stdexcept>

namespace sctrl {

namespace {

constexpr int kMinimizeBound = 12;  // subset search limit for witness minimization

void validate_roots(const Digraph& g, const RootSet& r) {
    for (Vertex v : r) {
        if (!g.has_vertex(v)) {
            throw std::invalid_argument("root vertex " + std::to_string(v) +
                                        " not in graph");
        }
    }
}

// H(A) plus one left input vertex per root, wired to that root's right copy.
BipartiteGraph augmented_bipartite(const Digraph& g, const RootSet& r) {
    BipartiteGraph h = bipartite_of(g);
    for (Vertex root : r) h.add_left({g.index_of(root)});
    return h;
}

// Right vertices reachable from `start` by alternating paths (right -> any
// neighbouring left, left -> its matched right). With a maximum matching all
// lefts seen on such paths are matched.
std::vector<int> alternating_closure(const BipartiteGraph& h, const Matching& m,
                                     int start) {
    std::vector<std::vector<int>> right_adj(h.right_count);
    for (int u = 0; u < h.left_count; ++u) {
        for (int rr : h.adj[u]) right_adj[rr].push_back(u);
    }
    std::vector<char> seen_right(h.right_count, 0), seen_left(h.left_count, 0);
    std::vector<int> stack{start}, result;
    seen_right[start] = 1;
    while (!stack.empty()) {
        int rr = stack.back();
        stack.pop_back();
        result.push_back(rr);
        for (int u : right_adj[rr]) {
            if (seen_left[u]) continue;
            seen_left[u] = 1;
            int nxt = m.left_match[u];
            if (nxt >= 0 && !seen_right[nxt]) {
                seen_right[nxt] = 1;
                stack.push_back(nxt);
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

// |N(T)| < |T| where N counts all left neighbours (inputs included).
bool violates_hall(const std::vector<std::vector<int>>& right_adj,
                   const std::vector<int>& rights) {
    VertexSet lefts;
    for (int rr : rights) lefts.insert(right_adj[rr].begin(), right_adj[rr].end());
    return static_cast<int>(lefts.size()) < static_cast<int>(rights.size());
}

// Smallest Hall violator inside `pool` (by cardinality, then lexicographic);
// greedy peeling for oversized pools.
std::vector<int> minimize_violator(const BipartiteGraph& h,
                                   const std::vector<int>& pool) {
    std::vector<std::vector<int>> right_adj(h.right_count);
    for (int u = 0; u < h.left_count; ++u) {
        for (int rr : h.adj[u]) right_adj[rr].push_back(u);
    }
    const int n = static_cast<int>(pool.size());
    if (n <= kMinimizeBound) {
        for (int k = 1; k <= n; ++k) {
            std::vector<char> take(n, 0);
            std::fill(take.begin(), take.begin() + k, 1);
            do {
                std::vector<int> subset;
                for (int i = 0; i < n; ++i) {
                    if (take[i]) subset.push_back(pool[i]);
                }
                if (violates_hall(right_adj, subset)) return subset;
            } while (std::prev_permutation(take.begin(), take.end()));
        }
        return pool;  // unreachable when pool itself violates Hall
    }
    std::vector<int> current = pool;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (size_t i = 0; i < current.size(); ++i) {
            std::vector<int> candidate = current;
            candidate.erase(candidate.begin() + static_cast<long>(i));
            if (violates_hall(right_adj, candidate)) {
                current = std::move(candidate);
                shrunk = true;
                break;
            }
        }
    }
    return current;
}

}  // namespace

DilationCheck dilation_free(const Digraph& g, const RootSet& r) {
    validate_roots(g, r);
    BipartiteGraph h = augmented_bipartite(g, r);
    Matching m = maximum_matching(h);
    if (m.size == g.vertex_count()) return {true, std::nullopt};
    const int start = m.unmatched_right().front();
    std::vector<int> violator = minimize_violator(h, alternating_closure(h, m, start));
    VertexSet witness;
    for (int rr : violator) witness.insert(g.vertices()[rr]);
    return {false, witness};
}

ControllabilityVerdict is_structurally_controllable(const Digraph& g, const RootSet& r) {
    validate_roots(g, r);
    ControllabilityVerdict verdict;
    VertexSet reached = reachable_from(g, r);
    for (Vertex v : g.vertices()) {
        if (!reached.count(v)) verdict.inaccessible.insert(v);
    }
    DilationCheck dil = dilation_free(g, r);
    verdict.dilation_witness = dil.witness;
    verdict.controllable = verdict.inaccessible.empty() && dil.dilation_free;
    return verdict;
}

InputConfiguration dedicated_input_configuration(const Digraph& g) {
    const SccDag dag = scc_dag(g);
    const std::vector<int> sources = dag.source_components();

    // Maximum matching of H(A) first; then append one slack left vertex per
    // source SCC and augment from the slacks only. Each slack matched this
    // way designates one unmatched vertex inside its SCC without changing
    // the state-matching cardinality.
    BipartiteGraph h = bipartite_of(g);
    Matching m = maximum_matching(h);
    std::vector<int> slack_lefts;
    for (int c : sources) {
        std::vector<int> rights;
        for (Vertex v : dag.components[c]) rights.push_back(g.index_of(v));
        slack_lefts.push_back(h.left_count);
        h.add_left(std::move(rights));
    }
    augment_from_lefts(h, m, slack_lefts);

    InputConfiguration config;
    const int n = g.vertex_count();
    for (int rr = 0; rr < n; ++rr) {
        const int partner = m.right_match[rr];
        if (partner < 0 || partner >= n) {  // unmatched or slack-designated
            config.from_unmatched.insert(g.vertices()[rr]);
        }
    }
    for (int c : sources) {
        const VertexSet& comp = dag.components[c];
        bool hit = std::any_of(comp.begin(), comp.end(), [&](Vertex v) {
            return config.from_unmatched.count(v) > 0;
        });
        if (!hit) config.from_source_sccs.insert(*comp.begin());
    }
    config.roots = config.from_unmatched;
    config.roots.insert(config.from_source_sccs.begin(), config.from_source_sccs.end());
    return config;
}

}  // namespace sctrl
