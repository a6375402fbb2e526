#pragma once

// Optimal deterministic factor allocation: particular solution, boundary
// system for the homogeneous part, and the infinite risk-aversion limit.

#include "ltmv/capmkt.hpp"
#include "ltmv/spectral.hpp"
#include "ltmv/variational.hpp"

namespace ltmv {

struct ParticularConstants {
    Vec2 k1;
    Vec2 k2;  ///< (sigma_r / (kappa - a), 0)
};

ParticularConstants particular_constants(const ElCoefficients& coeffs, const RiskPremiumFrame& frame,
                                         const ModelParams& p);

struct BoundarySolution {
    Vec2 q1;
    Vec2 q2;
    Mat2 D1;
    Mat2 D2;
    double residual{};   ///< ||M q - rhs|| / (||M|| ||q|| + ||rhs||) of the 4x4 system
    double condition{};  ///< one-norm condition of the row-equilibrated system
};

BoundarySolution boundary_solve(const ElCoefficients& coeffs, const SpectralSolution& sol,
                                const RiskPremiumFrame& frame, const Vec2& k1, const Vec2& k2,
                                double t, double s);

class OptimalStrategy {
public:
    OptimalStrategy(const ModelParams& p, const MarketState& st, double nu);

    Vec2 allocation(double u) const;

    /// y_u = k1 + psi_kappa(s-u) k2 + exp(S1 (s-u)) q1 + exp(S2 (s-u)) q2, with exact derivatives.
    Vec2 y(double u) const;
    Vec2 y_dot(double u) const;
    Vec2 y_ddot(double u) const;

    StrategyPath path() const;

    /// Copy whose k2 is scaled by `factor` without re-solving; used as a negative control.
    OptimalStrategy with_scaled_k2(double factor) const;

    const ModelParams& params() const noexcept { return p_; }
    const MarketState& state() const noexcept { return st_; }
    const RiskPremiumFrame& frame() const noexcept { return frame_; }
    const ElCoefficients& coeffs() const noexcept { return coeffs_; }
    const SpectralSolution& spectral() const noexcept { return sol_; }
    const Vec2& k1() const noexcept { return k_.k1; }
    const Vec2& k2() const noexcept { return k_.k2; }
    const Vec2& q1() const noexcept { return bnd_.q1; }
    const Vec2& q2() const noexcept { return bnd_.q2; }
    const BoundarySolution& boundary() const noexcept { return bnd_; }
    double nu() const noexcept { return coeffs_.nu; }
    double t() const noexcept { return st_.t(); }
    double s() const noexcept { return st_.s(); }

private:
    void check_domain(double u) const;

    ModelParams p_;
    MarketState st_;
    RiskPremiumFrame frame_;
    ElCoefficients coeffs_;
    SpectralSolution sol_;
    ParticularConstants k_;
    BoundarySolution bnd_;
};

Vec2 optimal_allocation(const OptimalStrategy& strategy, double u);

/// Zero-variance limit: the bond maturing at s, f_u = (-psi_a(s - u) sigma_r, 0).
Vec2 infinite_nu_allocation(const ModelParams& p, double u, double s);

StrategyPath infinite_nu_path(const ModelParams& p, const MarketState& st);

}  // namespace ltmv
