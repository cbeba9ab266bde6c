#include "sctrl/resilience.hpp"

#include <algorithm>
#include <stdexcept>

namespace sctrl {

namespace {

constexpr int kCriticalSetEnumerationBound = 12;
constexpr long kSubsetCap = 1L << 21;

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void require_controllable(const Digraph& g, const RootSet& r, const char* op) {
    if (!is_structurally_controllable(g, r).controllable) {
        throw std::logic_error(std::string(op) +
                               ": input pair is not structurally controllable");
    }
}

bool is_root_edge(const Edge& e, const RootSet& r) { return r.count(e.to) > 0; }

// Removal of edge sets only ever hurts controllability, so testing all
// subsets of one size settles all smaller sizes as well.
bool breaks_with_removals(const Digraph& g, const RootSet& r,
                          const EdgeList& candidates, int count) {
    const int n = static_cast<int>(candidates.size());
    if (count > n) return false;
    std::vector<char> take(n, 0);
    std::fill(take.begin(), take.begin() + count, 1);
    do {
        Digraph h = g;
        for (int i = 0; i < n; ++i) {
            if (take[i]) h = h.without_edge(candidates[i]);
        }
        if (!is_structurally_controllable(h, r).controllable) return true;
    } while (std::prev_permutation(take.begin(), take.end()));
    return false;
}

}  // namespace

CriticalEdgeReport failure_witness(const Digraph& g, const RootSet& r, const Edge& e) {
    if (!g.has_edge(e.from, e.to)) {
        throw std::invalid_argument("edge " + to_string(e) + " not in graph");
    }
    const Digraph h = g.without_edge(e);
    CriticalEdgeReport report;
    report.edge = e;

    VertexSet reached = reachable_from(h, r);
    VertexSet inaccessible;
    for (Vertex v : h.vertices()) {
        if (!reached.count(v)) inaccessible.insert(v);
    }
    if (!inaccessible.empty()) {
        const SccDag dag = scc_dag(h);
        for (int c : dag.source_components()) {
            const VertexSet& comp = dag.components[c];
            bool has_root = std::any_of(comp.begin(), comp.end(),
                                        [&](Vertex v) { return r.count(v) > 0; });
            if (!has_root) {
                report.witness_x = comp;  // components come smallest-first
                break;
            }
        }
    }

    DilationCheck dil = dilation_free(h, r);
    if (!dil.dilation_free) {
        // Skip dilation sets that merely restate the inaccessible region.
        if (!report.witness_x || !is_subset(*dil.witness, inaccessible)) {
            report.witness_s = dil.witness;
        }
    }

    if (!report.witness_x && !report.witness_s) {
        throw std::invalid_argument("edge " + to_string(e) + " is not critical");
    }
    report.witness_kind =
        report.witness_x ? WitnessKind::source_scc : WitnessKind::dilation_set;
    return report;
}

std::vector<CriticalEdgeReport> critical_edge_scan(const Digraph& g, const RootSet& r) {
    require_controllable(g, r, "critical_edge_scan");
    std::vector<CriticalEdgeReport> reports;
    for (const Edge& e : g.edges()) {
        if (!is_structurally_controllable(g.without_edge(e), r).controllable) {
            reports.push_back(failure_witness(g, r, e));
        }
    }
    return reports;
}

bool is_k_edge_controllable(const Digraph& g, const RootSet& r, int k,
                            int brute_force_bound) {
    require_controllable(g, r, "is_k_edge_controllable");
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (k > brute_force_bound) {
        throw std::invalid_argument("k exceeds the configured brute-force bound");
    }
    if (k == 1) return true;
    EdgeList candidates;
    for (const Edge& e : g.edges()) {
        if (!is_root_edge(e, r)) candidates.push_back(e);
    }
    return !breaks_with_removals(g, r, candidates, k - 1);
}

std::string EdgeControllabilityIndex::to_string() const {
    return (lower_bound ? ">= " : "") + std::to_string(value);
}

EdgeControllabilityIndex edge_controllability_index(const Digraph& g, const RootSet& r,
                                                    int max_k) {
    require_controllable(g, r, "edge_controllability_index");
    if (max_k < 2 || max_k > 3) {
        throw std::invalid_argument("max_k must be 2 or 3");
    }
    EdgeList candidates;
    for (const Edge& e : g.edges()) {
        if (!is_root_edge(e, r)) candidates.push_back(e);
    }
    for (int j = 1; j < max_k; ++j) {
        if (breaks_with_removals(g, r, candidates, j)) return {j, false};
    }
    return {max_k, true};
}

CriticalSetScan critical_sets(const Digraph& g, const RootSet* ambient_roots,
                              int max_size) {
    if (max_size < 1 || max_size > kCriticalSetEnumerationBound) {
        throw std::invalid_argument("max_size exceeds the enumeration bound");
    }
    const int n = g.vertex_count();
    const RootSet empty;
    const RootSet& roots = ambient_roots ? *ambient_roots : empty;

    CriticalSetScan scan;
    long examined = 0;
    std::vector<Vertex> verts = g.vertices();

    auto neighborhood_size = [&](const VertexSet& s, const Edge* skip) {
        VertexSet in;
        for (Vertex y : s) {
            for (Vertex x : g.in_neighbors(y)) {
                if (skip && skip->from == x && skip->to == y) continue;
                in.insert(x);
            }
        }
        int inputs = 0;
        for (Vertex y : s) {
            if (roots.count(y)) ++inputs;
        }
        return std::pair<VertexSet, int>(std::move(in), inputs);
    };

    for (int k = 1; k <= std::min(max_size, n); ++k) {
        std::vector<char> take(n, 0);
        std::fill(take.begin(), take.begin() + k, 1);
        do {
            if (++examined > kSubsetCap) {
                scan.complete = false;
                return scan;
            }
            VertexSet s;
            for (int i = 0; i < n; ++i) {
                if (take[i]) s.insert(verts[i]);
            }
            auto [in, inputs] = neighborhood_size(s, nullptr);
            if (static_cast<int>(in.size()) + inputs != static_cast<int>(s.size())) {
                continue;
            }
            bool stable = true;
            for (Vertex x : in) {
                for (Vertex y : g.out_neighbors(x)) {
                    if (!s.count(y)) continue;
                    Edge removed{x, y};
                    auto [in2, inputs2] = neighborhood_size(s, &removed);
                    if (static_cast<int>(in2.size()) + inputs2 !=
                        static_cast<int>(s.size())) {
                        stable = false;
                        break;
                    }
                }
                if (!stable) break;
            }
            if (stable) scan.sets.push_back({s, in, inputs});
        } while (std::prev_permutation(take.begin(), take.end()));
    }
    return scan;
}

ResilienceVerdict verify_single_edge_resilience(const Digraph& g, const RootSet& r,
                                                bool include_root_edges) {
    ResilienceVerdict verdict;
    verdict.base_controllable = is_structurally_controllable(g, r).controllable;
    for (const Edge& e : g.edges()) {
        if (!include_root_edges && is_root_edge(e, r)) continue;
        if (!is_structurally_controllable(g.without_edge(e), r).controllable) {
            verdict.violations.push_back(e);
        }
    }
    verdict.pass = verdict.base_controllable && verdict.violations.empty();
    return verdict;
}

}  // namespace sctrl
