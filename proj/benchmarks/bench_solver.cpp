#include <benchmark/benchmark.h>

#include "ltmv/solver.hpp"
#include "ltmv/spectral.hpp"
#include "ltmv/variational.hpp"

using namespace ltmv;

namespace {

ModelParams params_for(int which) { return which == 0 ? ModelParams::slow_reversion() : ModelParams::fast_reversion(); }

}  // namespace

static void BM_Solvents(benchmark::State& state) {
    const ModelParams p = params_for(static_cast<int>(state.range(0)));
    const MarketState st = MarketState::at_means(p, 0.0, 10.0);
    const LambdaMatrixCoeffs k = LambdaMatrixCoeffs::from(el_coefficients(build_frame(p, st), p, st, 1.0));
    for (auto _ : state) benchmark::DoNotOptimize(solvents(k));
}
BENCHMARK(BM_Solvents)->Arg(0)->Arg(1);

static void BM_OptimalStrategy(benchmark::State& state) {
    const ModelParams p = params_for(static_cast<int>(state.range(0)));
    const MarketState st = MarketState::at_means(p, 0.0, 30.0);
    for (auto _ : state) {
        OptimalStrategy s(p, st, 1.0);
        benchmark::DoNotOptimize(s.q1());
    }
}
BENCHMARK(BM_OptimalStrategy)->Arg(0)->Arg(1);

static void BM_AllocationEval(benchmark::State& state) {
    const ModelParams p = ModelParams::slow_reversion();
    const OptimalStrategy s(p, MarketState::at_means(p, 0.0, 30.0), 1.0);
    double u = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(s.allocation(u));
        u = u < 29.0 ? u + 0.37 : 0.0;
    }
}
BENCHMARK(BM_AllocationEval);
