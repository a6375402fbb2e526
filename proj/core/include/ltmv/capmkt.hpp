#pragma once

// Three-factor capital market: Vasicek short rate, mean-reverting equity
// surplus return, and the risk-premium decomposition built from them.

#include "ltmv/types.hpp"

namespace ltmv {

/// Raw, unvalidated market parameters. Rates and times are in years.
struct ParamValues {
    double kappa{};    ///< short-rate mean reversion under P
    double rbar{};     ///< short-rate mean level under P
    double sigma_r{};  ///< short-rate volatility
    double a{};        ///< short-rate mean reversion under Q
    double b{};        ///< short-rate mean level under Q
    double alpha{};    ///< surplus-return mean reversion
    double xbar{};     ///< surplus-return mean level
    double sigma_x{};  ///< surplus-return volatility
    double sigma_S{};  ///< equity volatility
    double rho{};      ///< correlation between the rate and equity drivers
};

/// Validated market parameters. Construction throws InvalidParameter when
/// volatilities or mean-reversion speeds are not positive, when kappa, a and
/// alpha are not pairwise distinct, or when rho^2 >= 1.
class ModelParams {
public:
    explicit ModelParams(const ParamValues& values);

    /// Reference set with slow mean reversion in the equity premium (alpha = 0.01).
    static ModelParams slow_reversion();
    /// Reference set with fast mean reversion in the equity premium (alpha = 0.25).
    static ModelParams fast_reversion();

    const ParamValues& values() const noexcept { return v_; }

    double kappa() const noexcept { return v_.kappa; }
    double rbar() const noexcept { return v_.rbar; }
    double sigma_r() const noexcept { return v_.sigma_r; }
    double a() const noexcept { return v_.a; }
    double b() const noexcept { return v_.b; }
    double alpha() const noexcept { return v_.alpha; }
    double xbar() const noexcept { return v_.xbar; }
    double sigma_x() const noexcept { return v_.sigma_x; }
    double sigma_S() const noexcept { return v_.sigma_S; }
    double rho() const noexcept { return v_.rho; }

    /// alpha' = alpha - sigma_x / sigma_S
    double alpha_prime() const noexcept { return v_.alpha - v_.sigma_x / v_.sigma_S; }

private:
    ParamValues v_;
};

/// Initial state (r_t, x_t) at time t and the horizon date s > t.
class MarketState {
public:
    MarketState(double r_t, double x_t, double t, double s);

    /// State at the long-run means of both factors.
    static MarketState at_means(const ModelParams& p, double t, double s);

    double r_t() const noexcept { return r_t_; }
    double x_t() const noexcept { return x_t_; }
    double t() const noexcept { return t_; }
    double s() const noexcept { return s_; }
    double horizon() const noexcept { return s_ - t_; }

private:
    double r_t_, x_t_, t_, s_;
};

struct RiskPremiumFrame {
    Vec2 xibar;     ///< long-run mean risk premium
    Vec2 xi_t;      ///< initial deviation from the mean
    Mat2 Xi;        ///< diag(a - kappa, -sigma_x / sigma_S)
    Mat2 Gamma;     ///< diag(kappa, alpha)
    Mat2 C;         ///< driver correlation matrix
    double eps0{};  ///< (ab - rbar kappa) / (a - kappa)
    Vec2 eps1;      ///< (sigma_r / (a - kappa), 0)
    Vec2 eta_r;     ///< Xi eps1 = (sigma_r, 0)
};

struct GaussianMoments2 {
    Vec2 mean;
    Mat2 cov;
};

/// (1 - exp(-alpha tau)) / alpha, with the limit tau at alpha = 0.
double psi(double alpha_coef, double tau);

/// (tau - 2 psi_a(tau) + psi_2a(tau)) / a^2 = int_0^tau psi_a(u)^2 du. Requires a > 0.
double upsilon(double a_coef, double tau);

RiskPremiumFrame build_frame(const ModelParams& p, const MarketState& st);

/// Conditional law of the risk premium tau years ahead.
GaussianMoments2 risk_premium_moments(const RiskPremiumFrame& frame, const ModelParams& p,
                                      double tau);

/// Vasicek zero-coupon yield R_t(t + tau).
double zero_coupon_rate(const ModelParams& p, double r_t, double tau);

/// Volatility of a zero-coupon bond maturing at M_B, seen at time u (never positive).
double bond_volatility(const ModelParams& p, double u, double maturity);

}  // namespace ltmv
