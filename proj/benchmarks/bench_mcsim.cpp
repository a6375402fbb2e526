#include <benchmark/benchmark.h>

#include "ltmv/mcsim.hpp"
#include "ltmv/solver.hpp"

using namespace ltmv;

static void BM_Simulate(benchmark::State& state) {
    const ModelParams p = ModelParams::slow_reversion();
    const MarketState st = MarketState::at_means(p, 0.0, 10.0);
    const OptimalStrategy s(p, st, 1.0);
    SimConfig cfg;
    cfg.n_paths = static_cast<std::size_t>(state.range(0));
    cfg.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(simulate(p, st, s.path(), cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0) *
                            static_cast<std::int64_t>(step_count(st.horizon(), cfg.dt)));
}
BENCHMARK(BM_Simulate)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_SchemeMoments(benchmark::State& state) {
    const ModelParams p = ModelParams::slow_reversion();
    const MarketState st = MarketState::at_means(p, 0.0, 10.0);
    const OptimalStrategy s(p, st, 1.0);
    const StrategyPath path = s.path();
    for (auto _ : state) benchmark::DoNotOptimize(scheme_moments(p, st, path, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SchemeMoments)->Arg(520)->Arg(5040);

static void BM_NormalStream(benchmark::State& state) {
    NormalStream ns(1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(ns.next4());
}
BENCHMARK(BM_NormalStream);
