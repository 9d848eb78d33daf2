#include <benchmark/benchmark.h>

#include "lir/cactus_color.hpp"
#include "lir/generate.hpp"

namespace {

lir::SimpleGraph make_cactus(int n) {
    lir::GenSpec spec;
    spec.n = n;
    spec.seed = 42;
    spec.spike_bias = 0.3;
    spec.cycle_ratio = 0.45;
    spec.max_cycle_len = 12;
    return lir::gen_cactus(spec);
}

void BM_color_cactus(benchmark::State& state) {
    lir::SimpleGraph g = make_cactus(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        lir::DoubledColoring c = lir::color_cactus(g);
        benchmark::DoNotOptimize(c);
    }
    state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_color_cactus)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_verify(benchmark::State& state) {
    lir::SimpleGraph g = make_cactus(static_cast<int>(state.range(0)));
    lir::DoubledColoring c = lir::color_cactus(g);
    for (auto _ : state) {
        auto rep = lir::verify(g, c);
        benchmark::DoNotOptimize(rep);
    }
    state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_verify)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_build_plan(benchmark::State& state) {
    lir::SimpleGraph g = make_cactus(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto plan = lir::build_plan(g);
        benchmark::DoNotOptimize(plan);
    }
}
BENCHMARK(BM_build_plan)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
