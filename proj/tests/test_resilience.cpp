#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sctrl/io.hpp"
#include "sctrl/resilience.hpp"

using namespace sctrl;

TEST_CASE("five-vertex example: three critical edges with exact witnesses") {
    Digraph g = load_topology("fig2");
    RootSet roots{1, 5};
    auto reports = critical_edge_scan(g, roots);
    REQUIRE(reports.size() == 3);

    CHECK(reports[0].edge == Edge{1, 2});
    CHECK(reports[0].witness_kind == WitnessKind::dilation_set);
    REQUIRE(reports[0].witness_s.has_value());
    CHECK(*reports[0].witness_s == VertexSet{2, 4});
    CHECK(!reports[0].witness_x.has_value());

    CHECK(reports[1].edge == Edge{3, 4});
    REQUIRE(reports[1].witness_x.has_value());
    CHECK(*reports[1].witness_x == VertexSet{4});

    CHECK(reports[2].edge == Edge{5, 3});
    REQUIRE(reports[2].witness_x.has_value());
    CHECK(*reports[2].witness_x == VertexSet{3, 4});
}

TEST_CASE("scan requires a controllable base pair") {
    Digraph g = load_topology("fig2");
    CHECK_THROWS_AS((void)critical_edge_scan(g, {2}), std::logic_error);
}

TEST_CASE("failure_witness rejects non-critical edges") {
    Digraph g = load_topology("fig1");
    CHECK_THROWS_AS((void)failure_witness(g, {1, 2, 3}, {1, 2}),
                    std::invalid_argument);
}

TEST_CASE("critical edges agree with per-edge brute force") {
    std::mt19937 rng(211);
    int controllable_seen = 0;
    for (int trial = 0; trial < 200 && controllable_seen < 60; ++trial) {
        Digraph g = oracle::random_digraph(rng, 3 + static_cast<int>(rng() % 5), 0.35);
        RootSet roots = oracle::random_roots(rng, g, 3);
        if (!oracle::controllable(g, roots)) continue;
        ++controllable_seen;
        std::set<Edge> expected;
        for (const Edge& e : g.edges()) {
            if (roots.count(e.to)) continue;  // root edges excluded from scans
            if (!oracle::controllable(g.without_edge(e), roots)) expected.insert(e);
        }
        std::set<Edge> got;
        for (const auto& rep : critical_edge_scan(g, roots)) got.insert(rep.edge);
        CHECK(got == expected);
    }
    CHECK(controllable_seen >= 40);
}

TEST_CASE("k-edge controllability matches the removal oracle") {
    Digraph g = load_topology("fig2");
    RootSet roots{1, 5};
    CHECK(is_k_edge_controllable(g, roots, 1));
    CHECK(!is_k_edge_controllable(g, roots, 2));
    CHECK(edge_controllability_index(g, roots).value == 1);
    CHECK(!edge_controllability_index(g, roots).lower_bound);
    CHECK_THROWS_AS((void)is_k_edge_controllable(g, roots, 5, 2), std::invalid_argument);
}

TEST_CASE("index reports a lower bound when nothing breaks") {
    Digraph g = load_topology("fig1");
    // With every vertex rooted, all edges are root edges; nothing to remove.
    EdgeControllabilityIndex index = edge_controllability_index(g, {1, 2, 3}, 3);
    CHECK(index.lower_bound);
    CHECK(index.value == 3);
    CHECK(index.to_string() == ">= 3");
}

TEST_CASE("critical sets are preserved under their in-edge deletions") {
    std::mt19937 rng(223);
    for (int trial = 0; trial < 60; ++trial) {
        Digraph g = oracle::random_digraph(rng, 3 + static_cast<int>(rng() % 4), 0.4);
        RootSet roots = oracle::random_roots(rng, g, 2);
        CriticalSetScan scan = critical_sets(g, &roots);
        CHECK(scan.complete);
        for (const CriticalSet& cs : scan.sets) {
            size_t inputs = 0;
            for (Vertex v : cs.members) {
                if (roots.count(v)) ++inputs;
            }
            CHECK(cs.in_neighborhood == in_neighborhood(g, cs.members));
            CHECK(static_cast<size_t>(cs.input_in_count) == inputs);
            CHECK(cs.in_neighborhood.size() + inputs == cs.members.size());
            // Deleting any single state edge into the set keeps the tight
            // balance: the reduced in-neighbourhood still has full size.
            for (Vertex u : cs.in_neighborhood) {
                for (Vertex v : cs.members) {
                    if (!g.has_edge(u, v)) continue;
                    VertexSet in =
                        in_neighborhood(g.without_edge({u, v}), cs.members);
                    CHECK(in.size() + inputs >= cs.members.size());
                }
            }
        }
    }
}

TEST_CASE("exhaustive single-edge verdict matches the naive oracle") {
    std::mt19937 rng(227);
    for (int trial = 0; trial < 80; ++trial) {
        Digraph g = oracle::random_digraph(rng, 3 + static_cast<int>(rng() % 5), 0.4);
        RootSet roots = oracle::random_roots(rng, g, 3);
        for (bool include_root_edges : {false, true}) {
            ResilienceVerdict verdict =
                verify_single_edge_resilience(g, roots, include_root_edges);
            CHECK(verdict.pass ==
                  oracle::edge_resilient(g, roots, include_root_edges));
            for (const Edge& e : verdict.violations) {
                CHECK(!oracle::controllable(g.without_edge(e), roots));
            }
        }
    }
}
