#pragma once

// Monte Carlo estimates of the horizon log-return moments of a deterministic
// strategy: exact OU transitions for (r, x) on a uniform grid, trapezoid time
// integrals, left-point stochastic integral.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ltmv/capmkt.hpp"
#include "ltmv/rng.hpp"
#include "ltmv/variational.hpp"

namespace ltmv {

using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;

struct SimConfig {
    std::size_t n_paths = 100000;
    double dt = 1.0 / 252.0;  ///< requested step; rounded so that the grid lands on s
    std::uint64_t seed = 20170501;
    bool antithetic = false;
    unsigned threads = 0;  ///< 0 = hardware concurrency
};

struct SimResult {
    double mean_log{};
    double var_log{};
    double se_mean{};
    double se_var{};
    double n_effective{};  ///< var_log / se_mean^2
    std::size_t n_paths{};
    std::size_t n_steps{};
    double dt{};
};

/// Number of steps covering `horizon` with steps no longer than dt.
std::size_t step_count(double horizon, double dt);

/// Covariance of (A_r, A_x, dW_r, dW_S) over one step h, where
/// A_r = int_0^h exp(-kappa (h - v)) dW_r(v) and A_x likewise with alpha and dW_S.
Mat4 step_covariance(const ModelParams& p, double h);

/// Lower factor L with L L' = step_covariance (Cholesky, eigen fallback).
Mat4 step_factor(const ModelParams& p, double h);

/// Standard-normal 4-vectors from one counter-based stream.
class NormalStream {
public:
    NormalStream(std::uint64_t seed, std::uint64_t stream) : eng_(seed, stream) {}
    Vec4 next4();
    double next();

private:
    CounterStream eng_;
};

struct TerminalSamples {
    std::vector<std::vector<double>> log_return;  ///< [strategy][path]
    std::vector<double> r_s;
    std::vector<double> x_s;
    std::size_t n_steps{};
    double dt{};
};

/// Several strategies evaluated on the same simulated factor paths.
TerminalSamples simulate_terminal(const ModelParams& p, const MarketState& st,
                                  std::span<const StrategyPath> strategies, const SimConfig& cfg);

SimResult simulate(const ModelParams& p, const MarketState& st, const StrategyPath& strategy,
                   const SimConfig& cfg);

std::vector<SimResult> simulate_many(const ModelParams& p, const MarketState& st,
                                     std::span<const StrategyPath> strategies, const SimConfig& cfg);

/// Moment estimates (with standard errors) from a sample of log-returns.
SimResult summarize(std::span<const double> x, bool antithetic_pairs);

/// Exact mean and variance of the simulated log-return for a given step count,
/// i.e. what simulate() converges to as n_paths grows.
struct SchemeMoments {
    double mean{};
    double var{};
};

SchemeMoments scheme_moments(const ModelParams& p, const MarketState& st,
                             const StrategyPath& strategy, std::size_t n_steps);

struct SweepRow {
    double dt{};
    std::size_t n_steps{};
    SchemeMoments scheme;
    double bias_mean{};
    double bias_var{};
    std::optional<SimResult> mc;
};

struct SweepReport {
    double reference_mean{};
    double reference_var{};
    std::vector<SweepRow> rows;
    std::vector<double> ratio_mean;  ///< |bias_{i+1}| / |bias_i|
    std::vector<double> ratio_var;
    std::vector<double> order_mean;  ///< log ratio / log dt ratio
    std::vector<double> order_var;
};

struct SweepOptions {
    bool run_monte_carlo = false;
    /// Exact moments to measure bias against; quadrature when absent.
    std::optional<SchemeMoments> reference;
};

SweepReport discretization_sweep(const ModelParams& p, const MarketState& st,
                                 const StrategyPath& strategy, const SimConfig& cfg,
                                 std::span<const double> dts, const SweepOptions& opt = {});

}  // namespace ltmv
