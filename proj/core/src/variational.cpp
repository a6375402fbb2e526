#include "ltmv/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "ltmv/errors.hpp"
#include "ltmv/quadrature.hpp"

namespace ltmv {

namespace {

Vec2 checked(const StrategyPath& sp, double u) {
    const Vec2 f = sp(u);
    if (!std::isfinite(f[0]) || !std::isfinite(f[1])) {
        std::ostringstream os;
        os << "strategy is not finite at u = " << u;
        throw NumericFailure(os.str(), std::numeric_limits<double>::infinity());
    }
    return f;
}

bool is_diagonal(const Mat2& m) { return m(0, 1) == 0.0 && m(1, 0) == 0.0; }

template <class Eval>
QuadratureValue richardson(Eval&& eval, double horizon, const QuadratureOptions& opt,
                           const char* what) {
    double width = opt.panel_width;
    double coarse = eval(width);
    double err = std::numeric_limits<double>::infinity();
    for (int level = 0; level < opt.max_refinements; ++level) {
        width *= 0.5;
        const double fine = eval(width);
        err = std::abs(fine - coarse);
        const double tol = opt.rel_tol * std::abs(fine) + 1e-13 * horizon;
        if (err <= tol) return {fine, err};
        coarse = fine;
    }
    throw NumericFailure(std::string(what) + ": quadrature did not reach tolerance", err);
}

}  // namespace

StrategyPath StrategyPath::zero(double t, double s) {
    return StrategyPath{[](double) { return Vec2(0.0, 0.0); }, t, s};
}

StrategyPath StrategyPath::constant(const Vec2& c, double t, double s) {
    return StrategyPath{[c](double) { return c; }, t, s};
}

TransformedPath::TransformedPath(StrategyPath strategy, const Mat2& Gamma, double panel_width)
    : strategy_(std::move(strategy)), g0_(Gamma(0, 0)), g1_(Gamma(1, 1)) {
    require(is_diagonal(Gamma), ErrorKind::InvalidParameter, "transform_y expects a diagonal Gamma");
    require(strategy_.s > strategy_.t, ErrorKind::InvalidHorizon, "strategy horizon is empty");
    breaks_ = quad::panel_breaks(strategy_.t, strategy_.s, panel_width);
    tails_.assign(breaks_.size(), Vec2::Zero());
    for (std::size_t j = breaks_.size() - 1; j-- > 0;) {
        const double lo = breaks_[j];
        const double hi = breaks_[j + 1];
        tails_[j] = segment(lo, hi) + decay(hi - lo).cwiseProduct(tails_[j + 1]);
    }
}

Vec2 TransformedPath::segment(double lo, double hi) const {
    if (hi <= lo) return Vec2::Zero();
    return quad::integrate_panel(
        quad::rule64(),
        [&](double v) -> Vec2 { return decay(v - lo).cwiseProduct(checked(strategy_, v)); }, lo,
        hi, Vec2(Vec2::Zero()));
}

Vec2 TransformedPath::operator()(double u) const {
    require(u >= strategy_.t - 1e-12 && u <= strategy_.s + 1e-12, ErrorKind::DomainError,
            "transform evaluated outside [t, s]");
    if (u >= strategy_.s) return Vec2::Zero();
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), u);
    const std::size_t j = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - breaks_.begin(), 1));
    const double hi = breaks_[j];
    return segment(u, hi) + decay(hi - u).cwiseProduct(tails_[j]);
}

Vec2 TransformedPath::derivative(double u) const {
    const Vec2 y = (*this)(u);
    return -strategy_(u) + Vec2(g0_ * y[0], g1_ * y[1]);
}

TransformedPath transform_y(const StrategyPath& strategy, const Mat2& Gamma) {
    return TransformedPath(strategy, Gamma);
}

QuadratureValue horizon_mean_quadrature_detail(const RiskPremiumFrame& frame, const ModelParams& p,
                                               const MarketState& st, const StrategyPath& strategy,
                                               const QuadratureOptions& opt) {
    const double t = st.t();
    const double s = st.s();
    const auto integrand = [&](double u) {
        const Vec2 f = checked(strategy, u);
        const Vec2 decay(std::exp(-p.kappa() * (u - t)), std::exp(-p.alpha() * (u - t)));
        const Vec2 xi_mean = frame.xibar + decay.cwiseProduct(frame.xi_t);
        return frame.eps0 + (frame.eps1 + f).dot(xi_mean) - 0.5 * f.dot(frame.C * f);
    };
    const auto eval = [&](double width) {
        const auto breaks = quad::panel_breaks(t, s, width);
        return quad::integrate_composite(quad::rule64(), integrand, breaks, 0.0);
    };
    return richardson(eval, s - t, opt, "horizon mean");
}

QuadratureValue horizon_variance_quadrature_detail(const RiskPremiumFrame& frame,
                                                   const ModelParams& p, const MarketState& st,
                                                   const StrategyPath& strategy,
                                                   const QuadratureOptions& opt) {
    const double t = st.t();
    const double s = st.s();
    StrategyPath sp = strategy;
    sp.t = t;
    sp.s = s;
    const auto eval = [&](double width) {
        const TransformedPath y(sp, frame.Gamma, width);
        const auto integrand = [&](double u) {
            const Vec2 f = checked(sp, u);
            const Vec2 psi_gamma(psi(p.kappa(), s - u), psi(p.alpha(), s - u));
            const Vec2 h = f + frame.Xi * (y(u) + psi_gamma.cwiseProduct(frame.eps1));
            return h.dot(frame.C * h);
        };
        const auto breaks = quad::panel_breaks(t, s, width);
        return quad::integrate_composite(quad::rule64(), integrand, breaks, 0.0);
    };
    return richardson(eval, s - t, opt, "horizon variance");
}

double horizon_mean_quadrature(const RiskPremiumFrame& frame, const ModelParams& p,
                               const MarketState& st, const StrategyPath& strategy,
                               const QuadratureOptions& opt) {
    return horizon_mean_quadrature_detail(frame, p, st, strategy, opt).value;
}

double horizon_variance_quadrature(const RiskPremiumFrame& frame, const ModelParams& p,
                                   const MarketState& st, const StrategyPath& strategy,
                                   const QuadratureOptions& opt) {
    return horizon_variance_quadrature_detail(frame, p, st, strategy, opt).value;
}

Vec2 ElCoefficients::g(double u) const {
    const double ps = psi(kappa, s - u);
    const Vec2 drift(kappa * xibar[0], Gamma(1, 1) * xibar[1]);
    const Vec2 hedge(1.0 - (kappa + a) * ps, rho * (1.0 - (kappa + alpha_prime) * ps));
    return -(drift + nu * sigma_r * hedge);
}

Vec2 ElCoefficients::b_at(double u) const {
    const Vec2 decay(std::exp(-kappa * (u - t)), std::exp(-Gamma(1, 1) * (u - t)));
    const Vec2 rhs = decay.cwiseProduct(xi_t) - nu * sigma_r * psi(kappa, s - u) * Vec2(1.0, rho);
    return C.partialPivLu().solve(rhs);
}

ElCoefficients el_coefficients(const RiskPremiumFrame& frame, const ModelParams& p,
                               const MarketState& st, double nu) {
    require(std::isfinite(nu) && nu > 0.0, ErrorKind::InvalidRiskAversion,
            "risk aversion nu must be finite and positive");
    ElCoefficients c;
    const double k = p.kappa();
    const double al = p.alpha();
    const double a = p.a();
    const double ap = p.alpha_prime();
    const double w = 1.0 + nu;

    c.nu = nu;
    c.rho = p.rho();
    c.alpha_prime = ap;
    c.gamma_r2 = (k * k + nu * a * a) / w;
    c.gamma_S2 = (al * al + nu * ap * ap) / w;
    c.a_nu = (al * k + nu * a * ap) / w;
    c.b_nu = ((k - al) + nu * (a - ap)) / w;

    c.A << c.gamma_r2, c.rho * c.a_nu, c.rho * c.a_nu, c.gamma_S2;
    c.B << 0.0, c.rho * c.b_nu, -c.rho * c.b_nu, 0.0;
    c.C = frame.C;
    c.Gamma = frame.Gamma;
    c.Xi = frame.Xi;
    c.Gamma_xi = frame.Gamma + frame.Xi;

    c.b0 = frame.C.partialPivLu().solve(frame.xibar);
    c.kappa = k;
    c.a = a;
    c.sigma_r = p.sigma_r();
    c.t = st.t();
    c.s = st.s();
    c.xibar = frame.xibar;
    c.xi_t = frame.xi_t;
    return c;
}

double el_residual(const ElCoefficients& coeffs, std::span<const Vec2> y, double u0, double du) {
    require(y.size() >= 10, ErrorKind::InvalidGrid, "residual grid needs at least 10 points");
    require(du > 0.0, ErrorKind::InvalidGrid, "grid step must be positive");
    const double w = 1.0 + coeffs.nu;
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        const Vec2 yd = (y[i + 1] - y[i - 1]) / (2.0 * du);
        const Vec2 ydd = (y[i + 1] - 2.0 * y[i] + y[i - 1]) / (du * du);
        const double u = u0 + du * static_cast<double>(i);
        const Vec2 r = w * (coeffs.C * ydd + coeffs.B * yd - coeffs.A * y[i]) - coeffs.g(u);
        worst = std::max(worst, r.norm());
    }
    return worst;
}

}  // namespace ltmv
