#include <benchmark/benchmark.h>

#include "sctrl/controllability.hpp"
#include "sctrl/io.hpp"
#include "sctrl/resilience.hpp"
#include "sctrl/synthesis.hpp"

namespace {

using namespace sctrl;

void BM_ControllabilityCheck(benchmark::State& state) {
    Digraph g = load_topology("ieee14");
    RootSet roots{8, 10};
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_structurally_controllable(g, roots));
    }
}
BENCHMARK(BM_ControllabilityCheck);

void BM_CriticalEdgeScan(benchmark::State& state) {
    Digraph g = load_topology("ieee14");
    RootSet roots{8, 10};
    for (auto _ : state) {
        benchmark::DoNotOptimize(critical_edge_scan(g, roots));
    }
}
BENCHMARK(BM_CriticalEdgeScan);

void BM_ExhaustiveVerify(benchmark::State& state) {
    Digraph g = load_topology("ieee14");
    RootSet roots{1, 8, 10, 14};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_single_edge_resilience(g, roots));
    }
}
BENCHMARK(BM_ExhaustiveVerify);

void BM_Synthesize(benchmark::State& state) {
    Digraph g = load_topology("ieee14");
    auto specs = load_subgraphs("ieee14_paper.subgraphs");
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            synthesize(g, RootSet{8, 10}, specs, /*paranoid=*/false));
    }
}
BENCHMARK(BM_Synthesize);

}  // namespace

BENCHMARK_MAIN();
