#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sctrl/graph.hpp"

using namespace sctrl;

TEST_CASE("build collapses duplicates and expands undirected pairs") {
    Digraph g = Digraph::build(3, {{1, 2}, {1, 2}, {2, 3}}, true);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK(g.has_edge(3, 2));
    CHECK(!g.has_edge(1, 3));
}

TEST_CASE("neighbour lists are sorted and consistent") {
    Digraph g = Digraph::build(4, {{1, 2}, {3, 2}, {4, 2}, {2, 1}});
    CHECK(g.in_neighbors(2) == std::vector<Vertex>{1, 3, 4});
    CHECK(g.out_neighbors(2) == std::vector<Vertex>{1});
    CHECK(g.max_out_degree() == 1);
    CHECK_THROWS_AS((void)g.index_of(9), std::invalid_argument);
}

TEST_CASE("without_edge / with_edges / with_vertex preserve identifiers") {
    Digraph g = Digraph::build(3, {{1, 2}, {2, 3}});
    Digraph cut = g.without_edge({1, 2});
    CHECK(!cut.has_edge(1, 2));
    CHECK(cut.vertex_count() == 3);
    Digraph back = cut.with_edges({{1, 2}});
    CHECK(back == g);
    Digraph grown = g.with_vertex(7, {{2, 7}, {7, 3}});
    CHECK(grown.vertices() == std::vector<Vertex>{1, 2, 3, 7});
    CHECK(grown.has_edge(2, 7));
    CHECK(grown.has_edge(7, 3));
}

TEST_CASE("in_neighborhood over state edges") {
    Digraph g = Digraph::build(4, {{1, 2}, {3, 2}, {2, 3}, {4, 3}});
    CHECK(in_neighborhood(g, {2, 3}) == VertexSet{1, 2, 3, 4});
    CHECK(in_neighborhood(g, {1}) == VertexSet{});
}

TEST_CASE("maximum matching equals exhaustive search on random bipartite graphs") {
    std::mt19937 rng(11);
    std::bernoulli_distribution coin(0.3);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        BipartiteGraph h;
        h.left_count = h.right_count = n;
        h.adj.resize(static_cast<size_t>(n));
        for (auto& rights : h.adj) {
            for (int j = 0; j < n; ++j) {
                if (coin(rng)) rights.push_back(j);
            }
        }
        Matching m = maximum_matching(h);
        CHECK(m.size == oracle::max_matching_size(h.adj, n));
    }
}

TEST_CASE("augment_from_lefts keeps old lefts matched") {
    // Path bipartite graph: lefts 0,1 over rights 0,1; matching 0->0, 1->1.
    BipartiteGraph h;
    h.left_count = h.right_count = 2;
    h.adj = {{0}, {0, 1}};
    Matching m = maximum_matching(h);
    REQUIRE(m.size == 2);
    // A slack left adjacent to right 0 must re-route through left 1, not
    // steal right 0 permanently.
    h.add_left({0});
    augment_from_lefts(h, m, {2});
    CHECK(m.size == 2);  // no unmatched right, nothing to gain
    CHECK(m.left_match[0] == 0);
    CHECK(m.left_match[1] == 1);
}

TEST_CASE("scc_dag matches pairwise-reachability components") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        Digraph g = oracle::random_digraph(rng, 2 + static_cast<int>(rng() % 6), 0.3);
        SccDag dag = scc_dag(g);
        // Same component iff mutually reachable.
        for (Vertex u : g.vertices()) {
            for (Vertex v : g.vertices()) {
                bool same = dag.component_of_index[static_cast<size_t>(g.index_of(u))] ==
                            dag.component_of_index[static_cast<size_t>(g.index_of(v))];
                bool mutual = oracle::reachable(g, {u}).count(v) &&
                              oracle::reachable(g, {v}).count(u);
                CHECK(same == mutual);
            }
        }
        // Source components have no incoming edge from outside.
        for (int c : dag.source_components()) {
            for (const Edge& e : g.edges()) {
                bool into = dag.components[static_cast<size_t>(c)].count(e.to) &&
                            !dag.components[static_cast<size_t>(c)].count(e.from);
                CHECK(!into);
            }
        }
    }
}

TEST_CASE("components are ordered by smallest member") {
    Digraph g = Digraph::build(5, {{4, 5}, {5, 4}, {1, 2}, {2, 1}, {2, 3}});
    SccDag dag = scc_dag(g);
    REQUIRE(dag.components.size() == 3);
    CHECK(dag.components[0] == VertexSet{1, 2});
    CHECK(dag.components[1] == VertexSet{3});
    CHECK(dag.components[2] == VertexSet{4, 5});
}

TEST_CASE("reachable_from equals BFS oracle") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        Digraph g = oracle::random_digraph(rng, 3 + static_cast<int>(rng() % 6), 0.25);
        RootSet src = oracle::random_roots(rng, g, 2);
        CHECK(reachable_from(g, src) == oracle::reachable(g, src));
    }
}
