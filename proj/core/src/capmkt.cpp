#include "ltmv/capmkt.hpp"

#include <cmath>
#include <string>

#include "ltmv/errors.hpp"

namespace ltmv {

namespace {

constexpr double kDistinctTol = 1e-12;

void require_distinct(double x, double y, const char* nx, const char* ny) {
    const double scale = std::max(std::abs(x), std::abs(y));
    if (std::abs(x - y) <= kDistinctTol * scale) {
        fail(ErrorKind::InvalidParameter,
             std::string(nx) + " and " + ny + " must be distinct (formulas divide by their difference)");
    }
}

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) fail(ErrorKind::InvalidParameter, std::string(name) + " is not finite");
}

}  // namespace

ModelParams::ModelParams(const ParamValues& v) : v_(v) {
    require_finite(v.kappa, "kappa");
    require_finite(v.rbar, "rbar");
    require_finite(v.sigma_r, "sigma_r");
    require_finite(v.a, "a");
    require_finite(v.b, "b");
    require_finite(v.alpha, "alpha");
    require_finite(v.xbar, "xbar");
    require_finite(v.sigma_x, "sigma_x");
    require_finite(v.sigma_S, "sigma_S");
    require_finite(v.rho, "rho");

    require(v.sigma_r > 0.0, ErrorKind::InvalidParameter, "sigma_r must be positive");
    require(v.sigma_x > 0.0, ErrorKind::InvalidParameter, "sigma_x must be positive");
    require(v.sigma_S > 0.0, ErrorKind::InvalidParameter, "sigma_S must be positive");
    require(v.kappa > 0.0, ErrorKind::InvalidParameter, "kappa must be positive");
    require(v.alpha > 0.0, ErrorKind::InvalidParameter, "alpha must be positive");
    require(v.a > 0.0, ErrorKind::InvalidParameter, "a must be positive");
    require(v.rho * v.rho < 1.0, ErrorKind::InvalidParameter, "rho^2 must be below 1");

    require_distinct(v.kappa, v.a, "kappa", "a");
    require_distinct(v.kappa, v.alpha, "kappa", "alpha");
    require_distinct(v.alpha, v.a, "alpha", "a");
}

ModelParams ModelParams::slow_reversion() {
    return ModelParams(ParamValues{.kappa = 0.05,
                                   .rbar = 0.02,
                                   .sigma_r = 0.01,
                                   .a = 0.04,
                                   .b = 0.03,
                                   .alpha = 0.01,
                                   .xbar = 0.04,
                                   .sigma_x = 0.007,
                                   .sigma_S = 0.15,
                                   .rho = 0.25});
}

ModelParams ModelParams::fast_reversion() {
    ParamValues v = slow_reversion().values();
    v.alpha = 0.25;
    return ModelParams(v);
}

MarketState::MarketState(double r_t, double x_t, double t, double s)
    : r_t_(r_t), x_t_(x_t), t_(t), s_(s) {
    require(std::isfinite(r_t) && std::isfinite(x_t), ErrorKind::InvalidParameter,
            "initial state must be finite");
    require(std::isfinite(t) && std::isfinite(s) && s > t, ErrorKind::InvalidHorizon,
            "horizon date s must exceed t");
}

MarketState MarketState::at_means(const ModelParams& p, double t, double s) {
    return MarketState(p.rbar(), p.xbar(), t, s);
}

double psi(double alpha_coef, double tau) {
    if (alpha_coef == 0.0) return tau;
    return -std::expm1(-alpha_coef * tau) / alpha_coef;
}

double upsilon(double a_coef, double tau) {
    require(a_coef > 0.0, ErrorKind::InvalidParameter, "upsilon requires a positive rate");
    const double z = a_coef * tau;
    if (z < 0.5) {
        // tau^3 * sum_{n>=3} (-1)^n (2 - 2^(n-1)) z^(n-3) / n!
        double sum = 0.0;
        double zpow = 1.0;      // z^(n-3)
        double fact = 6.0;      // n!
        double two_pow = 4.0;   // 2^(n-1)
        for (int n = 3; n < 40; ++n) {
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            const double term = sign * (2.0 - two_pow) * zpow / fact;
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
            zpow *= z;
            fact *= static_cast<double>(n + 1);
            two_pow *= 2.0;
        }
        return tau * tau * tau * sum;
    }
    return (tau - 2.0 * psi(a_coef, tau) + psi(2.0 * a_coef, tau)) / (a_coef * a_coef);
}

RiskPremiumFrame build_frame(const ModelParams& p, const MarketState& st) {
    RiskPremiumFrame f;
    const double amk = p.a() - p.kappa();
    f.xibar = Vec2(p.a() * (p.rbar() - p.b()) / p.sigma_r(), p.xbar() / p.sigma_S());
    f.xi_t = Vec2((st.r_t() - p.rbar()) * amk / p.sigma_r(), (st.x_t() - p.xbar()) / p.sigma_S());
    f.Xi = diag2(amk, -p.sigma_x() / p.sigma_S());
    f.Gamma = diag2(p.kappa(), p.alpha());
    f.C << 1.0, p.rho(), p.rho(), 1.0;
    f.eps0 = (p.a() * p.b() - p.rbar() * p.kappa()) / amk;
    f.eps1 = Vec2(p.sigma_r() / amk, 0.0);
    f.eta_r = Vec2(p.sigma_r(), 0.0);
    return f;
}

GaussianMoments2 risk_premium_moments(const RiskPremiumFrame& frame, const ModelParams& p,
                                      double tau) {
    require(tau >= 0.0, ErrorKind::DomainError, "tau must be non-negative");
    GaussianMoments2 m;
    const Vec2 decay(std::exp(-p.kappa() * tau), std::exp(-p.alpha() * tau));
    m.mean = frame.xibar + decay.cwiseProduct(frame.xi_t);

    Mat2 v;
    const double cross = p.rho() * psi(p.kappa() + p.alpha(), tau);
    v << psi(2.0 * p.kappa(), tau), cross, cross, psi(2.0 * p.alpha(), tau);
    const Mat2 c = frame.Xi * v * frame.Xi;
    m.cov = 0.5 * (c + c.transpose());
    return m;
}

double zero_coupon_rate(const ModelParams& p, double r_t, double tau) {
    require(tau > 0.0, ErrorKind::InvalidHorizon, "zero-coupon maturity must be positive");
    const double a = p.a();
    return p.b() + (r_t - p.b()) / tau * psi(a, tau) -
           p.sigma_r() * p.sigma_r() / (2.0 * tau) * upsilon(a, tau);
}

double bond_volatility(const ModelParams& p, double u, double maturity) {
    require(maturity >= u, ErrorKind::MaturityInPast, "bond maturity precedes valuation time");
    return -psi(p.a(), maturity - u) * p.sigma_r();
}

}  // namespace ltmv
