#include <benchmark/benchmark.h>

#include "ltmv/analytics.hpp"
#include "ltmv/solver.hpp"
#include "ltmv/variational.hpp"

using namespace ltmv;

static void BM_ClosedFormMoments(benchmark::State& state) {
    const ModelParams p = ModelParams::slow_reversion();
    const OptimalStrategy s(p, MarketState::at_means(p, 0.0, static_cast<double>(state.range(0))), 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(closed_form_moments(s));
}
BENCHMARK(BM_ClosedFormMoments)->Arg(10)->Arg(50);

static void BM_QuadratureMoments(benchmark::State& state) {
    const ModelParams p = ModelParams::slow_reversion();
    const MarketState st = MarketState::at_means(p, 0.0, static_cast<double>(state.range(0)));
    const OptimalStrategy s(p, st, 1.0);
    const StrategyPath path = s.path();
    for (auto _ : state) {
        benchmark::DoNotOptimize(horizon_mean_quadrature(s.frame(), p, st, path));
        benchmark::DoNotOptimize(horizon_variance_quadrature(s.frame(), p, st, path));
    }
}
BENCHMARK(BM_QuadratureMoments)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_EfficientFrontier(benchmark::State& state) {
    const ModelParams p = ModelParams::slow_reversion();
    const MarketState st = MarketState::at_means(p, 0.0, 30.0);
    const std::vector<double> grid = default_nu_grid();
    for (auto _ : state) benchmark::DoNotOptimize(efficient_frontier(p, st, grid));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(BM_EfficientFrontier)->Unit(benchmark::kMillisecond);

static void BM_FrontierAtVol(benchmark::State& state) {
    const ModelParams p = ModelParams::slow_reversion();
    const MarketState st = MarketState::at_means(p, 0.0, 30.0);
    for (auto _ : state) benchmark::DoNotOptimize(frontier_at_vol(p, st, 0.05));
}
BENCHMARK(BM_FrontierAtVol)->Unit(benchmark::kMillisecond);
