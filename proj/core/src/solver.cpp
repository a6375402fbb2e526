#include "ltmv/solver.hpp"

#include <cmath>
#include <sstream>

#include "ltmv/errors.hpp"

namespace ltmv {

namespace {

using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;

double one_norm(const Mat4& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

}  // namespace

ParticularConstants particular_constants(const ElCoefficients& c, const RiskPremiumFrame& frame,
                                         const ModelParams& p) {
    const double det = c.gamma_r2 * c.gamma_S2 - c.rho * c.rho * c.a_nu * c.a_nu;
    require(det > 1e-14 * c.gamma_r2 * c.gamma_S2, ErrorKind::SingularSystem,
            "coefficient matrix A is singular");
    const double k = p.kappa();
    const double a = p.a();
    const double sr = p.sigma_r();
    const double nu = c.nu;

    const Vec2 rhs = Vec2(k * frame.xibar[0], p.alpha() * frame.xibar[1]) +
                     sr / (a - k) * Vec2(k + nu * a, c.rho * (p.alpha() + nu * c.alpha_prime));
    Mat2 A_inv;
    A_inv << c.gamma_S2, -c.rho * c.a_nu, -c.rho * c.a_nu, c.gamma_r2;
    A_inv /= det;

    ParticularConstants out;
    out.k1 = A_inv * rhs / (1.0 + nu);
    out.k2 = Vec2(sr / (k - a), 0.0);
    return out;
}

BoundarySolution boundary_solve(const ElCoefficients& c, const SpectralSolution& sol,
                                const RiskPremiumFrame& frame, const Vec2& k1, const Vec2& k2,
                                double t, double s) {
    require(s > t, ErrorKind::InvalidHorizon, "horizon must satisfy s > t");
    const double nu = c.nu;
    const double tau = s - t;
    const Mat2 base = c.Gamma + nu * c.Gamma_xi;

    BoundarySolution out;
    out.D1 = base + (1.0 + nu) * sol.S1;
    out.D2 = base + (1.0 + nu) * sol.S2;

    Mat4 M;
    M.block<2, 2>(0, 0).setIdentity();
    M.block<2, 2>(0, 2).setIdentity();
    M.block<2, 2>(2, 0) = out.D1 * expm_solvent(sol, 1, tau);
    M.block<2, 2>(2, 2) = out.D2 * expm_solvent(sol, 2, tau);

    Vec4 rhs;
    rhs.head<2>() = -k1;
    rhs.tail<2>() = c.C.partialPivLu().solve(frame.xibar + frame.xi_t) - (c.Gamma * k1 + k2) -
                    nu * (c.Gamma_xi * k1 + k2);

    Mat4 Ms = M;
    Vec4 rs = rhs;
    for (int i = 0; i < 4; ++i) {
        const double w = Ms.row(i).cwiseAbs().maxCoeff();
        require(w > 0.0 && std::isfinite(w), ErrorKind::SingularSystem,
                "boundary system has a zero or non-finite row");
        Ms.row(i) /= w;
        rs[i] /= w;
    }

    const Eigen::PartialPivLU<Mat4> lu(Ms);
    out.condition = one_norm(Ms) * one_norm(lu.inverse());
    if (!(out.condition <= 1e12)) {
        std::ostringstream os;
        os << "boundary system is ill-conditioned (one-norm condition " << out.condition << ")";
        fail(ErrorKind::IllConditionedBoundary, os.str());
    }
    const Vec4 q = lu.solve(rs);
    out.q1 = q.head<2>();
    out.q2 = q.tail<2>();
    out.residual = (M * q - rhs).norm() / (M.norm() * q.norm() + rhs.norm());
    return out;
}

OptimalStrategy::OptimalStrategy(const ModelParams& p, const MarketState& st, double nu)
    : p_(p),
      st_(st),
      frame_(build_frame(p, st)),
      coeffs_(el_coefficients(frame_, p, st, nu)),
      sol_(solvents(LambdaMatrixCoeffs::from(coeffs_))),
      k_(particular_constants(coeffs_, frame_, p)),
      bnd_(boundary_solve(coeffs_, sol_, frame_, k_.k1, k_.k2, st.t(), st.s())) {}

void OptimalStrategy::check_domain(double u) const {
    const double slack = 1e-12 * std::max(1.0, std::abs(st_.s()));
    if (!(u >= st_.t() - slack && u <= st_.s() + slack)) {
        std::ostringstream os;
        os << "u = " << u << " lies outside [" << st_.t() << ", " << st_.s() << "]";
        fail(ErrorKind::DomainError, os.str());
    }
}

Vec2 OptimalStrategy::allocation(double u) const {
    check_domain(u);
    const double x = std::max(st_.s() - u, 0.0);
    const Mat2& G = frame_.Gamma;
    return (G * k_.k1 + k_.k2) + (G + sol_.S1) * expm_solvent(sol_, 1, x) * bnd_.q1 +
           (G + sol_.S2) * expm_solvent(sol_, 2, x) * bnd_.q2;
}

Vec2 OptimalStrategy::y(double u) const {
    check_domain(u);
    const double x = std::max(st_.s() - u, 0.0);
    return k_.k1 + psi(p_.kappa(), x) * k_.k2 + expm_solvent(sol_, 1, x) * bnd_.q1 +
           expm_solvent(sol_, 2, x) * bnd_.q2;
}

Vec2 OptimalStrategy::y_dot(double u) const {
    check_domain(u);
    const double x = std::max(st_.s() - u, 0.0);
    return (p_.kappa() * psi(p_.kappa(), x) - 1.0) * k_.k2 -
           sol_.S1 * expm_solvent(sol_, 1, x) * bnd_.q1 -
           sol_.S2 * expm_solvent(sol_, 2, x) * bnd_.q2;
}

Vec2 OptimalStrategy::y_ddot(double u) const {
    check_domain(u);
    const double x = std::max(st_.s() - u, 0.0);
    const double k = p_.kappa();
    return k * (k * psi(k, x) - 1.0) * k_.k2 +
           sol_.S1 * sol_.S1 * expm_solvent(sol_, 1, x) * bnd_.q1 +
           sol_.S2 * sol_.S2 * expm_solvent(sol_, 2, x) * bnd_.q2;
}

StrategyPath OptimalStrategy::path() const {
    return StrategyPath{[self = *this](double u) { return self.allocation(u); }, st_.t(), st_.s()};
}

OptimalStrategy OptimalStrategy::with_scaled_k2(double factor) const {
    OptimalStrategy copy = *this;
    copy.k_.k2 *= factor;
    return copy;
}

Vec2 optimal_allocation(const OptimalStrategy& strategy, double u) { return strategy.allocation(u); }

Vec2 infinite_nu_allocation(const ModelParams& p, double u, double s) {
    require(u <= s, ErrorKind::DomainError, "allocation time lies after the horizon");
    return Vec2(-psi(p.a(), s - u) * p.sigma_r(), 0.0);
}

StrategyPath infinite_nu_path(const ModelParams& p, const MarketState& st) {
    const double s = st.s();
    return StrategyPath{[p, s](double u) { return infinite_nu_allocation(p, std::min(u, s), s); },
                        st.t(), s};
}

}  // namespace ltmv
