#include <gtest/gtest.h>

#include <random>

#include "ltmv/errors.hpp"
#include "ltmv/solver.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace ltmv;
using ltmv::test::fast;
using ltmv::test::slow;

namespace {

struct RitzCase {
    const char* name;
    ModelParams p;
    double nu, horizon;
    double fr_t, fS_t, fr_mid, fS_mid, fr_s, fS_s;
};

#define RITZ(set, nu_tag, nu, h)                                                                              \
    RitzCase {                                                                                                \
        #set "_" #nu_tag "_h" #h, set(), nu, h, oracle::fr_##set##_##nu_tag##_h##h##_t,                       \
            oracle::fS_##set##_##nu_tag##_h##h##_t, oracle::fr_##set##_##nu_tag##_h##h##_mid,                 \
            oracle::fS_##set##_##nu_tag##_h##h##_mid, oracle::fr_##set##_##nu_tag##_h##h##_s,                 \
            oracle::fS_##set##_##nu_tag##_h##h##_s                                                            \
    }

std::vector<RitzCase> ritz_cases() {
    return {RITZ(slow, nu0p1, 0.1, 10), RITZ(slow, nu0p1, 0.1, 30), RITZ(slow, nu1, 1.0, 10),
            RITZ(slow, nu1, 1.0, 30),   RITZ(slow, nu10, 10.0, 10), RITZ(slow, nu10, 10.0, 30),
            RITZ(fast, nu0p1, 0.1, 10), RITZ(fast, nu0p1, 0.1, 30), RITZ(fast, nu1, 1.0, 10),
            RITZ(fast, nu1, 1.0, 30),   RITZ(fast, nu10, 10.0, 10), RITZ(fast, nu10, 10.0, 30)};
}

}  // namespace

TEST(ParticularConstants, SlowSet) {
    const OptimalStrategy s(slow(), ltmv::test::at_means(slow(), 10), 1.0);
    EXPECT_NEAR(s.k2()[0], 1.0, 1e-13);
    EXPECT_EQ(s.k2()[1], 0.0);
}

TEST(ParticularConstants, SatisfyPsiMatchingCondition) {
    for (const ModelParams& p : {slow(), fast()}) {
        for (double nu : {0.1, 1.0, 10.0}) {
            const OptimalStrategy s(p, MarketState(0.03, 0.01, 0.0, 10.0), nu);
            const ElCoefficients& c = s.coeffs();
            const double k = p.kappa();
            const Vec2 lhs = (1 + nu) * (k * k * c.C + k * c.B - c.A) * s.k2();
            const Vec2 rhs = nu * p.sigma_r() * Vec2(p.a() + k, p.rho() * (p.alpha_prime() + k));
            EXPECT_NEAR((lhs - rhs).norm(), 0.0, 1e-12);

            const Vec2 k1_rhs = Vec2(k * s.frame().xibar[0], p.alpha() * s.frame().xibar[1]) +
                                p.sigma_r() / (p.a() - k) *
                                    Vec2(k + nu * p.a(), p.rho() * (p.alpha() + nu * p.alpha_prime()));
            EXPECT_NEAR(((1 + nu) * c.A * s.k1() - k1_rhs).norm(), 0.0, 1e-13);
        }
    }
}

TEST(ParticularConstants, InfiniteRiskAversionLimit) {
    const ModelParams p = fast();
    const OptimalStrategy s(p, ltmv::test::at_means(p, 10), 1e12);
    EXPECT_NEAR((s.coeffs().Gamma_xi * s.k1() + s.k2()).norm(), 0.0, 1e-9);
}

TEST(BoundarySolve, UpperBoundaryRowAndResidual) {
    std::mt19937_64 rng(41);
    int solved = 0;
    while (solved < 50) {
        const ModelParams p(ltmv::test::random_values(rng));
        const MarketState st(0.04 * std::uniform_real_distribution<double>()(rng), p.xbar() * 0.5, 0.0,
                             std::uniform_real_distribution<double>(1.0, 50.0)(rng));
        std::optional<OptimalStrategy> s;
        try {
            s.emplace(p, st, ltmv::test::random_nu(rng));
        } catch (const Error& e) {
            EXPECT_FALSE(is_input_error(e.kind())) << e.what();
            continue;
        }
        ++solved;
        const BoundarySolution& b = s->boundary();
        EXPECT_LE(b.residual, 1e-14);
        EXPECT_NEAR((s->q1() + s->q2() + s->k1()).norm(), 0.0, 1e-12 * std::max(1.0, s->k1().norm()));
        EXPECT_NEAR(s->y(st.s()).norm(), 0.0, 1e-10 * std::max(1.0, s->k1().norm()));
    }
}

TEST(BoundarySolve, InfiniteRiskAversionLimit) {
    const ModelParams p = fast();
    const OptimalStrategy s(p, MarketState(0.03, 0.01, 0.0, 10.0), 1e12);
    EXPECT_NEAR(s.q1().norm(), 0.0, 1e-9);
    EXPECT_NEAR((s.q2() + s.k1()).norm(), 0.0, 1e-9);
}

TEST(OptimalStrategy, BoundaryConditionsAndAnalyticResidual) {
    for (const ModelParams& p : {slow(), fast()}) {
        for (double nu : {0.1, 1.0, 10.0}) {
            const MarketState st(0.025, 0.03, 2.0, 32.0);
            const OptimalStrategy s(p, st, nu);
            const ElCoefficients& c = s.coeffs();
            const Vec2 lower = c.b0 + c.b_at(st.t()) - (c.Gamma + nu * c.Gamma_xi) * s.y(st.t()) +
                               (1 + nu) * s.y_dot(st.t());
            EXPECT_LT(lower.norm(), 1e-8);
            for (int i = 0; i <= 1000; ++i) {
                const double u = st.t() + 30.0 * i / 1000.0;
                const Vec2 r = (1 + nu) * (c.C * s.y_ddot(u) + c.B * s.y_dot(u) - c.A * s.y(u)) - c.g(u);
                EXPECT_LT(r.norm(), 1e-6);
                EXPECT_NEAR((s.allocation(u) - (c.Gamma * s.y(u) - s.y_dot(u))).norm(), 0.0, 1e-14);
            }
        }
    }
}

TEST(OptimalStrategy, AnalyticDerivativesMatchFiniteDifferences) {
    const OptimalStrategy s(slow(), MarketState(0.03, 0.05, 0.0, 10.0), 1.0);
    const double h = 1e-4;
    for (double u = 0.5; u < 10.0; u += 0.5) {
        EXPECT_LT((s.y_dot(u) - (s.y(u + h) - s.y(u - h)) / (2 * h)).norm(), 1e-8);
        EXPECT_LT((s.y_ddot(u) - (s.y_dot(u + h) - s.y_dot(u - h)) / (2 * h)).norm(), 1e-8);
    }
}

TEST(OptimalStrategy, TransformOfAllocationReproducesY) {
    const OptimalStrategy s(fast(), MarketState(0.01, 0.06, 0.0, 20.0), 3.0);
    const TransformedPath y = transform_y(s.path(), s.frame().Gamma);
    EXPECT_EQ(y(20.0), Vec2::Zero());
    for (double u = 0.0; u <= 20.0; u += 0.7) EXPECT_LT((y(u) - s.y(u)).norm(), 1e-12) << u;
}

TEST(OptimalStrategy, MatchesDirectRitzMaximiser) {
    for (const RitzCase& c : ritz_cases()) {
        const OptimalStrategy s(c.p, ltmv::test::at_means(c.p, c.horizon), c.nu);
        const Vec2 ft = optimal_allocation(s, 0.0), fm = s.allocation(c.horizon / 2), fs = s.allocation(c.horizon);
        EXPECT_NEAR(ft[0], c.fr_t, 1e-9) << c.name;
        EXPECT_NEAR(ft[1], c.fS_t, 1e-9) << c.name;
        EXPECT_NEAR(fm[0], c.fr_mid, 1e-9) << c.name;
        EXPECT_NEAR(fm[1], c.fS_mid, 1e-9) << c.name;
        EXPECT_NEAR(fs[0], c.fr_s, 1e-9) << c.name;
        EXPECT_NEAR(fs[1], c.fS_s, 1e-9) << c.name;
    }
}

TEST(OptimalStrategy, ApproachesBondStrategy) {
    const ModelParams p = fast();
    const MarketState st(0.03, 0.01, 0.0, 30.0);
    const OptimalStrategy s(p, st, 1e12);
    for (double u = 0.0; u <= 30.0; u += 0.25) {
        EXPECT_LT((s.allocation(u) - infinite_nu_allocation(p, u, 30.0)).cwiseAbs().maxCoeff(), 1e-5) << u;
    }
}

TEST(OptimalStrategy, EquityDecouplesWithoutCorrelation) {
    ParamValues v = slow().values();
    v.rho = 0.0;
    const MarketState st(v.rbar, v.xbar, 0.0, 15.0);
    const OptimalStrategy base(ModelParams(v), st, 2.0);
    ParamValues w = v;
    w.sigma_r = 0.02;
    w.a = 0.07;
    w.b = 0.045;
    w.kappa = 0.11;
    const OptimalStrategy varied(ModelParams(w), st, 2.0);
    for (double u = 0.0; u <= 15.0; u += 0.5) {
        EXPECT_NEAR(base.allocation(u)[1], varied.allocation(u)[1], 1e-10) << u;
    }
}

TEST(OptimalStrategy, DomainChecks) {
    const OptimalStrategy s(slow(), MarketState(0.02, 0.04, 1.0, 11.0), 1.0);
    for (double u : {0.5, 11.5}) {
        try {
            s.allocation(u);
            FAIL() << u;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::DomainError);
        }
    }
    EXPECT_THROW(OptimalStrategy(slow(), MarketState(0.02, 0.04, 0.0, 10.0), 0.0), Error);
}

TEST(OptimalStrategy, ScaledK2ControlChangesOnlyK2) {
    const OptimalStrategy s(slow(), ltmv::test::at_means(slow(), 10), 1.0);
    const OptimalStrategy c = s.with_scaled_k2(1.5);
    EXPECT_EQ(c.k1(), s.k1());
    EXPECT_EQ(c.q1(), s.q1());
    EXPECT_DOUBLE_EQ(c.k2()[0], 1.5 * s.k2()[0]);
}

TEST(InfiniteNuAllocation, Values) {
    const ModelParams p = slow();
    EXPECT_EQ(infinite_nu_allocation(p, 10.0, 10.0), Vec2::Zero());
    const Vec2 f = infinite_nu_allocation(p, 5.0, 35.0);
    EXPECT_NEAR(f[0], -0.174701, 1e-6);
    EXPECT_EQ(f[1], 0.0);
    EXPECT_EQ(infinite_nu_allocation(p, 2.0, 7.0)[0], bond_volatility(p, 2.0, 7.0));
}
