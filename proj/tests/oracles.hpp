// Brute-force oracles and random-instance generators used by the unit and
// acceptance suites. Everything here is deliberately naive and independent of
// the library's algorithms: exhaustive subset scans, recursive matching
// search, and plain BFS. Exponential, so keep instance sizes small.
#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <random>
#include <vector>

#include "sctrl/graph.hpp"

namespace oracle {

using sctrl::Digraph;
using sctrl::Edge;
using sctrl::RootSet;
using sctrl::Vertex;
using sctrl::VertexSet;

// Recursive maximum-matching search on an adjacency list (lefts -> rights).
inline int max_matching_size(const std::vector<std::vector<int>>& adj,
                             int right_count) {
    std::vector<char> used(static_cast<size_t>(right_count), 0);
    int best = 0;
    auto rec = [&](auto&& self, size_t left, int size) -> void {
        best = std::max(best, size);
        if (left == adj.size()) return;
        self(self, left + 1, size);  // leave this left unmatched
        for (int r : adj[left]) {
            if (used[static_cast<size_t>(r)]) continue;
            used[static_cast<size_t>(r)] = 1;
            self(self, left + 1, size + 1);
            used[static_cast<size_t>(r)] = 0;
        }
    };
    rec(rec, 0, 0);
    return best;
}

inline VertexSet reachable(const Digraph& g, const RootSet& roots) {
    VertexSet seen;
    std::vector<Vertex> stack(roots.begin(), roots.end());
    for (Vertex v : roots) seen.insert(v);
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.out_neighbors(v)) {
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    return seen;
}

// Exhaustive dilation test over all nonempty state subsets. A dedicated
// input vertex counts as one extra in-neighbour for each root in the subset.
inline std::optional<VertexSet> find_dilation(const Digraph& g,
                                              const RootSet& roots) {
    const auto& vs = g.vertices();
    const size_t n = vs.size();
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
        VertexSet s;
        for (size_t i = 0; i < n; ++i) {
            if (mask & (uint64_t{1} << i)) s.insert(vs[i]);
        }
        VertexSet in_nbrs;
        size_t input_nbrs = 0;
        for (Vertex v : s) {
            for (Vertex w : g.in_neighbors(v)) in_nbrs.insert(w);
            if (roots.count(v)) ++input_nbrs;
        }
        if (in_nbrs.size() + input_nbrs < s.size()) return s;
    }
    return std::nullopt;
}

inline bool controllable(const Digraph& g, const RootSet& roots) {
    if (roots.empty()) return g.vertex_count() == 0;
    for (Vertex r : roots) {
        if (!std::binary_search(g.vertices().begin(), g.vertices().end(), r)) {
            return false;
        }
    }
    if (reachable(g, roots).size() != static_cast<size_t>(g.vertex_count())) {
        return false;
    }
    return !find_dilation(g, roots).has_value();
}

inline bool edge_resilient(const Digraph& g, const RootSet& roots,
                           bool include_root_edges = false) {
    if (!controllable(g, roots)) return false;
    for (const Edge& e : g.edges()) {
        if (!include_root_edges && roots.count(e.to)) continue;
        if (!controllable(g.without_edge(e), roots)) return false;
    }
    return true;
}

// Smallest dedicated root set, found by scanning subsets in ascending size.
inline size_t min_dedicated_roots(const Digraph& g) {
    const auto& vs = g.vertices();
    const size_t n = vs.size();
    size_t best = n + 1;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        const auto size = static_cast<size_t>(std::popcount(mask));
        if (size >= best) continue;
        RootSet roots;
        for (size_t i = 0; i < n; ++i) {
            if (mask & (uint64_t{1} << i)) roots.insert(vs[i]);
        }
        if (controllable(g, roots)) best = size;
    }
    return best;
}

// Optimal set cover by exhaustive candidate-subset scan.
inline size_t min_set_cover(const std::vector<VertexSet>& universe_sets,
                            const std::vector<Vertex>& candidates) {
    const size_t m = candidates.size();
    size_t best = m + 1;
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
        const auto size = static_cast<size_t>(std::popcount(mask));
        if (size >= best) continue;
        bool covers = true;
        for (const VertexSet& s : universe_sets) {
            bool hit = false;
            for (size_t i = 0; i < m && !hit; ++i) {
                if ((mask & (uint64_t{1} << i)) && s.count(candidates[i])) {
                    hit = true;
                }
            }
            if (!hit) {
                covers = false;
                break;
            }
        }
        if (covers) best = size;
    }
    return best;
}

inline Digraph random_digraph(std::mt19937& rng, int n, double edge_prob) {
    std::bernoulli_distribution coin(edge_prob);
    sctrl::EdgeList pairs;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
            if (u != v && coin(rng)) pairs.push_back({u, v});
        }
    }
    return Digraph::build(n, pairs, /*undirected_expansion=*/false);
}

// Random digraph whose maximum out-degree is at most two.
inline Digraph random_bounded_digraph(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> degree(0, 2);
    std::uniform_int_distribution<Vertex> pick(1, n);
    sctrl::EdgeList pairs;
    for (Vertex u = 1; u <= n; ++u) {
        int d = degree(rng);
        for (int i = 0; i < d; ++i) {
            Vertex v = pick(rng);
            if (v != u) pairs.push_back({u, v});
        }
    }
    return Digraph::build(n, pairs, false);
}

inline RootSet random_roots(std::mt19937& rng, const Digraph& g,
                            int max_roots) {
    std::uniform_int_distribution<int> count(1, max_roots);
    RootSet roots;
    const auto& vs = g.vertices();
    std::uniform_int_distribution<size_t> pick(0, vs.size() - 1);
    int k = std::min(count(rng), static_cast<int>(vs.size()));
    while (static_cast<int>(roots.size()) < k) roots.insert(vs[pick(rng)]);
    return roots;
}

}  // namespace oracle
