#pragma once

// Horizon log-return moments of an arbitrary deterministic factor exposure,
// the integral transform y_u of the exposure, and the coefficients of the
// Euler-Lagrange equation whose solution is the mean-variance optimum.

#include <functional>
#include <span>
#include <vector>

#include "ltmv/capmkt.hpp"
#include "ltmv/types.hpp"

namespace ltmv {

/// Deterministic factor exposure f(u) = (f_r, f_S) on [t, s].
struct StrategyPath {
    std::function<Vec2(double)> f;
    double t{};
    double s{};

    Vec2 operator()(double u) const { return f(u); }

    static StrategyPath zero(double t, double s);
    static StrategyPath constant(const Vec2& c, double t, double s);
};

struct QuadratureOptions {
    double panel_width = 1.0;  ///< initial panel width in years (64 nodes each)
    double rel_tol = 1e-9;
    int max_refinements = 4;
};

struct QuadratureValue {
    double value{};
    double error_estimate{};
};

/// y_u = int_u^s exp(-Gamma (v - u)) f_v dv for diagonal Gamma, evaluated by
/// composite Gauss-Legendre with precomputed panel tails.
class TransformedPath {
public:
    TransformedPath(StrategyPath strategy, const Mat2& Gamma, double panel_width = 1.0);

    Vec2 operator()(double u) const;
    /// dy/du = -f_u + Gamma y_u
    Vec2 derivative(double u) const;

    const StrategyPath& strategy() const noexcept { return strategy_; }

private:
    Vec2 segment(double lo, double hi) const;  // int_lo^hi exp(-Gamma (v - lo)) f_v dv
    Vec2 decay(double dt) const { return Vec2(std::exp(-g0_ * dt), std::exp(-g1_ * dt)); }

    StrategyPath strategy_;
    double g0_, g1_;
    std::vector<double> breaks_;
    std::vector<Vec2> tails_;
};

TransformedPath transform_y(const StrategyPath& strategy, const Mat2& Gamma);

/// E log(V_s / V_t) by composite quadrature with one Richardson check.
double horizon_mean_quadrature(const RiskPremiumFrame& frame, const ModelParams& p,
                               const MarketState& st, const StrategyPath& strategy,
                               const QuadratureOptions& opt = {});

/// V log(V_s / V_t) = int h_u' C h_u du.
double horizon_variance_quadrature(const RiskPremiumFrame& frame, const ModelParams& p,
                                   const MarketState& st, const StrategyPath& strategy,
                                   const QuadratureOptions& opt = {});

QuadratureValue horizon_mean_quadrature_detail(const RiskPremiumFrame& frame, const ModelParams& p,
                                               const MarketState& st, const StrategyPath& strategy,
                                               const QuadratureOptions& opt = {});
QuadratureValue horizon_variance_quadrature_detail(const RiskPremiumFrame& frame,
                                                   const ModelParams& p, const MarketState& st,
                                                   const StrategyPath& strategy,
                                                   const QuadratureOptions& opt = {});

/// Coefficients of (1 + nu) [C y'' + B y' - A y] = g_u and its boundary data.
struct ElCoefficients {
    Mat2 A;
    Mat2 B;
    Mat2 C;
    Mat2 Gamma;
    Mat2 Xi;
    Mat2 Gamma_xi;  ///< Gamma + Xi = diag(a, alpha')
    double gamma_r2{};
    double gamma_S2{};
    double a_nu{};
    double b_nu{};
    double alpha_prime{};
    double nu{};
    double rho{};
    Vec2 b0;  ///< C b0 = xibar

    // Data needed to evaluate g(u) and b(u).
    double kappa{};
    double a{};
    double sigma_r{};
    double t{};
    double s{};
    Vec2 xibar;
    Vec2 xi_t;

    /// Inhomogeneous term g_u.
    Vec2 g(double u) const;
    /// Lower-boundary vector b_u, solving C b_u = exp(-Gamma (u - t)) xi_t - nu sigma_r psi_kappa(s - u) (1, rho).
    Vec2 b_at(double u) const;
};

ElCoefficients el_coefficients(const RiskPremiumFrame& frame, const ModelParams& p,
                               const MarketState& st, double nu);

/// Max over interior grid points of |(1 + nu)[C y'' + B y' - A y] - g| with
/// central second-order differences on the uniform grid u0 + i du.
double el_residual(const ElCoefficients& coeffs, std::span<const Vec2> y, double u0, double du);

}  // namespace ltmv
