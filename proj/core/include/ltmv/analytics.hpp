#pragma once

// Closed-form horizon moments of the optimal strategy, efficient frontiers
// and allocation tables.

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ltmv/solver.hpp"

namespace ltmv {

struct HorizonMoments {
    double mean_log{};
    double var_log{};
    double ann_mean{};
    double ann_vol{};

    static HorizonMoments from(double mean_log, double var_log, double horizon);
};

/// Everything the closed forms need. Built from an OptimalStrategy, but the
/// constants may be overridden (e.g. all zero for the cash-only strategy).
struct MomentInputs {
    ModelParams params;
    MarketState state;
    RiskPremiumFrame frame;
    SpectralSolution sol;
    Vec2 k1, k2, q1, q2;

    static MomentInputs from(const OptimalStrategy& strategy);
};

struct MeanTerms {
    double cash{};       ///< rbar tau + psi_kappa(tau) (r_t - rbar)
    double linear{};
    double quadratic{};  ///< already carries the -1/2

    double total() const { return cash + linear + quadratic; }
};

/// int_0^tau exp((dbar_l + dund_m) x) dx, with the exact tau limit for vanishing sums.
CMat2 kmatrix(const CVec2& dbar, const CVec2& dund, double tau);
Mat2 kmatrix(const Vec2& dbar, const Vec2& dund, double tau);

/// Psi_M(tau) = M^-1 (I - exp(-M tau)) for diagonal M = diag(d).
Mat2 psi_diag(const Vec2& d, double tau);

/// (e^z - 1) / z
Complex phi1(Complex z);

MeanTerms closed_form_mean_terms(const MomentInputs& in);
double closed_form_mean(const MomentInputs& in);
double closed_form_variance(const MomentInputs& in);

double closed_form_mean(const OptimalStrategy& strategy);
double closed_form_variance(const OptimalStrategy& strategy);
HorizonMoments closed_form_moments(const OptimalStrategy& strategy);

/// Moments of the zero-coupon bond strategy reached as nu -> infinity.
HorizonMoments infinite_nu_moments(const ModelParams& p, const MarketState& st);

inline constexpr double kInfiniteNu = std::numeric_limits<double>::infinity();

struct FrontierPoint {
    double nu{};
    double ann_vol{};
    double ann_mean{};
    double mean_log{};
    double var_log{};
    // Diagnostics; NaN/empty for the infinite-nu anchor.
    std::string branch;
    double discriminant{std::numeric_limits<double>::quiet_NaN()};
    double boundary_residual{std::numeric_limits<double>::quiet_NaN()};
    double boundary_condition{std::numeric_limits<double>::quiet_NaN()};
};

struct FrontierFailure {
    double nu{};
    std::string message;
};

struct FrontierReport {
    std::vector<FrontierPoint> points;
    std::vector<FrontierFailure> failures;
};

/// `n` log-spaced values from hi down to lo.
std::vector<double> log_spaced_nu(double lo, double hi, int n);

/// Infinite-nu anchor followed by 50 log-spaced values from 1e3 down to 1e-3.
std::vector<double> default_nu_grid();

/// One full solve per grid value; the grid must be positive and descending
/// (+infinity allowed). Points that fail are reported and skipped.
FrontierReport efficient_frontier(const ModelParams& p, const MarketState& st,
                                  std::span<const double> nu_grid);

struct TargetVolPoint {
    double nu{};
    double ann_vol{};
    double ann_mean{};
};

/// Frontier point whose annualized volatility equals `target_vol`, by bisection in log nu.
TargetVolPoint frontier_at_vol(const ModelParams& p, const MarketState& st, double target_vol);

struct AllocationRow {
    double u{};
    double f_r{};
    double f_S{};
};

std::vector<AllocationRow> allocation_table(const OptimalStrategy& strategy, int n_points);
std::vector<AllocationRow> allocation_table(const StrategyPath& strategy, int n_points);

}  // namespace ltmv
