#include <gtest/gtest.h>

#include <random>

#include "ltmv/capmkt.hpp"
#include "ltmv/errors.hpp"
#include "ltmv/mcsim.hpp"
#include "ltmv/quadrature.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace ltmv;
using ltmv::test::slow;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::InternalConsistency;
}

}  // namespace

TEST(ModelParams, RejectsInvalidValues) {
    const ParamValues base = slow().values();
    auto with = [&](auto mutate) {
        ParamValues v = base;
        mutate(v);
        return kind_of([&] { ModelParams p(v); });
    };
    EXPECT_EQ(with([](ParamValues& v) { v.sigma_r = 0.0; }), ErrorKind::InvalidParameter);
    EXPECT_EQ(with([](ParamValues& v) { v.sigma_x = -0.01; }), ErrorKind::InvalidParameter);
    EXPECT_EQ(with([](ParamValues& v) { v.sigma_S = 0.0; }), ErrorKind::InvalidParameter);
    EXPECT_EQ(with([](ParamValues& v) { v.kappa = 0.0; }), ErrorKind::InvalidParameter);
    EXPECT_EQ(with([](ParamValues& v) { v.a = v.kappa; }), ErrorKind::InvalidParameter);
    EXPECT_EQ(with([](ParamValues& v) { v.alpha = v.a; }), ErrorKind::InvalidParameter);
    EXPECT_EQ(with([](ParamValues& v) { v.alpha = v.kappa * (1.0 + 1e-14); }), ErrorKind::InvalidParameter);
    EXPECT_EQ(with([](ParamValues& v) { v.rho = 1.0; }), ErrorKind::InvalidParameter);
    EXPECT_EQ(with([](ParamValues& v) { v.rbar = std::nan(""); }), ErrorKind::InvalidParameter);
}

TEST(ModelParams, ReferenceSets) {
    const ParamValues s = slow().values();
    EXPECT_DOUBLE_EQ(s.kappa, 0.05);
    EXPECT_DOUBLE_EQ(s.rbar, 0.02);
    EXPECT_DOUBLE_EQ(s.sigma_r, 0.01);
    EXPECT_DOUBLE_EQ(s.a, 0.04);
    EXPECT_DOUBLE_EQ(s.b, 0.03);
    EXPECT_DOUBLE_EQ(s.alpha, 0.01);
    EXPECT_DOUBLE_EQ(s.xbar, 0.04);
    EXPECT_DOUBLE_EQ(s.sigma_x, 0.007);
    EXPECT_DOUBLE_EQ(s.sigma_S, 0.15);
    EXPECT_DOUBLE_EQ(s.rho, 0.25);
    EXPECT_DOUBLE_EQ(ModelParams::fast_reversion().alpha(), 0.25);
    EXPECT_DOUBLE_EQ(slow().alpha_prime(), 0.01 - 0.007 / 0.15);
}

TEST(MarketState, RequiresHorizonAfterStart) {
    EXPECT_EQ(kind_of([] { MarketState(0.02, 0.04, 5.0, 5.0); }), ErrorKind::InvalidHorizon);
    EXPECT_EQ(kind_of([] { MarketState(0.02, 0.04, 5.0, 1.0); }), ErrorKind::InvalidHorizon);
    EXPECT_DOUBLE_EQ(MarketState(0.02, 0.04, 2.0, 12.0).horizon(), 10.0);
}

TEST(Psi, Values) {
    EXPECT_EQ(psi(0.05, 0.0), 0.0);
    EXPECT_NEAR(psi(0.05, 10.0), 7.869387, 5e-7);
    EXPECT_DOUBLE_EQ(psi(0.0, 10.0), 10.0);
    EXPECT_NEAR(psi(1e-14, 10.0), 10.0, 1e-11);
    EXPECT_NEAR(psi(0.04, 10.0), oracle::psi_4_10, 1e-14);
    EXPECT_NEAR(psi(0.05, 30.0), oracle::psi_5_30, 1e-13);
    EXPECT_NEAR(psi(0.25, 0.5), oracle::psi_25_0p5, 1e-15);
    EXPECT_NEAR(psi(-0.02, 10.0), (std::exp(0.2) - 1.0) / 0.02, 1e-12);
}

TEST(Psi, IncreasingAndBounded) {
    for (double alpha : {0.01, 0.05, 0.25}) {
        double prev = 0.0;
        for (double tau = 0.5; tau <= 60.0; tau += 0.5) {
            const double v = psi(alpha, tau);
            EXPECT_GT(v, prev);
            EXPECT_LT(v, 1.0 / alpha);
            prev = v;
        }
    }
}

TEST(Upsilon, Values) {
    EXPECT_EQ(upsilon(0.04, 0.0), 0.0);
    EXPECT_NEAR(upsilon(0.04, 10.0), 249.62, 0.01);
    EXPECT_NEAR(upsilon(0.04, 10.0), oracle::upsilon_4_10, 1e-10);
    EXPECT_NEAR(upsilon(0.05, 30.0), oracle::upsilon_5_30, 1e-9);
    EXPECT_NEAR(upsilon(0.25, 0.5), oracle::upsilon_25_0p5, 1e-15);
    EXPECT_GT(upsilon(0.3, 1e-6), 0.0);
    EXPECT_THROW(upsilon(0.0, 1.0), Error);
    EXPECT_THROW(upsilon(-0.1, 1.0), Error);
}

TEST(Upsilon, MatchesQuadratureOfPsiSquared) {
    const auto& rule = quad::rule64();
    for (double alpha : {0.01, 0.05, 0.25}) {
        for (double tau : {1.0, 10.0, 50.0}) {
            const auto breaks = quad::panel_breaks(0.0, tau, 2.0);
            const double q = quad::integrate_composite(
                rule, [&](double u) { return std::pow(psi(alpha, u), 2); }, breaks, 0.0);
            EXPECT_NEAR(upsilon(alpha, tau) / q, 1.0, 1e-10) << alpha << " " << tau;
        }
    }
}

TEST(Frame, SlowSet) {
    const ModelParams p = slow();
    const RiskPremiumFrame f = build_frame(p, MarketState(0.02, 0.04, 0.0, 10.0));
    EXPECT_EQ(f.xi_t, Vec2::Zero());
    EXPECT_NEAR(f.xibar[0], -0.04, 1e-15);
    EXPECT_NEAR(f.xibar[1], 0.04 / 0.15, 1e-15);
    EXPECT_NEAR(f.eta_r[0], 0.01, 1e-17);
    EXPECT_EQ(f.eta_r[1], 0.0);
    EXPECT_EQ(f.Gamma, diag2(0.05, 0.01));
    EXPECT_NEAR(f.Xi(0, 0), -0.01, 1e-17);
    EXPECT_NEAR(f.Xi(1, 1), -0.007 / 0.15, 1e-17);
    EXPECT_EQ(f.Xi(0, 1), 0.0);
    EXPECT_EQ(f.C(0, 0), 1.0);
    EXPECT_EQ(f.C(0, 1), 0.25);
    EXPECT_NEAR(f.eps0, (0.04 * 0.03 - 0.02 * 0.05) / (0.04 - 0.05), 1e-15);
    EXPECT_NEAR(f.eps1[0], -1.0, 1e-14);
    EXPECT_EQ(f.eps1[1], 0.0);
}

TEST(Frame, InitialDeviation) {
    const ModelParams p = slow();
    const RiskPremiumFrame f = build_frame(p, MarketState(0.03, 0.01, 0.0, 10.0));
    EXPECT_NEAR(f.xi_t[0], 0.01 * (0.04 - 0.05) / 0.01, 1e-15);
    EXPECT_NEAR(f.xi_t[1], (0.01 - 0.04) / 0.15, 1e-15);
}

TEST(RiskPremiumMoments, ZeroAndAsymptotic) {
    const ModelParams p = slow();
    const RiskPremiumFrame f = build_frame(p, MarketState(0.03, 0.01, 0.0, 10.0));
    const GaussianMoments2 m0 = risk_premium_moments(f, p, 0.0);
    EXPECT_EQ(m0.cov, Mat2::Zero());
    EXPECT_NEAR((m0.mean - (f.xibar + f.xi_t)).norm(), 0.0, 1e-15);

    const GaussianMoments2 inf = risk_premium_moments(f, p, 1e6);
    const Mat2 Xinv = f.Xi.inverse();
    const Mat2 V = Xinv * inf.cov * Xinv;
    EXPECT_NEAR(V(0, 0), 1.0 / (2 * 0.05), 1e-8);
    EXPECT_NEAR(V(0, 1), 0.25 / (0.05 + 0.01), 1e-8);
    EXPECT_NEAR(V(1, 1), 1.0 / (2 * 0.01), 1e-8);
    EXPECT_NEAR((inf.mean - f.xibar).norm(), 0.0, 1e-15);
}

TEST(RiskPremiumMoments, MatchesIndependentIntegral) {
    for (auto [p, rr, rs, ss] : {std::tuple{slow(), oracle::premium_cov_slow_10_rr, oracle::premium_cov_slow_10_rs,
                                            oracle::premium_cov_slow_10_ss},
                                 std::tuple{ltmv::test::fast(), oracle::premium_cov_fast_10_rr,
                                            oracle::premium_cov_fast_10_rs, oracle::premium_cov_fast_10_ss}}) {
        const GaussianMoments2 m = risk_premium_moments(build_frame(p, ltmv::test::at_means(p, 10)), p, 10.0);
        EXPECT_NEAR(m.cov(0, 0), rr, 1e-15);
        EXPECT_NEAR(m.cov(0, 1), rs, 1e-15);
        EXPECT_NEAR(m.cov(1, 0), rs, 1e-15);
        EXPECT_NEAR(m.cov(1, 1), ss, 1e-15);
    }
}

TEST(RiskPremiumMoments, CovariancePositiveSemidefinite) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const ModelParams p(ltmv::test::random_values(rng));
        const RiskPremiumFrame f = build_frame(p, ltmv::test::at_means(p, 10));
        for (double tau : {0.01, 1.0, 10.0, 100.0}) {
            const Mat2 c = risk_premium_moments(f, p, tau).cov;
            EXPECT_EQ(c(0, 1), c(1, 0));
            Eigen::SelfAdjointEigenSolver<Mat2> es(c);
            EXPECT_GE(es.eigenvalues().minCoeff(), -1e-12);
        }
    }
}

TEST(RiskPremiumMoments, MatchesSampleCovarianceOfExactDraws) {
    const ModelParams p = slow();
    const RiskPremiumFrame f = build_frame(p, ltmv::test::at_means(p, 10));
    const Mat2 cov = risk_premium_moments(f, p, 10.0).cov;
    const Mat4 L = step_factor(p, 10.0);
    NormalStream z(99, 0);
    const int n = 1000000;
    std::vector<Vec2> xs(n);
    Vec2 mean = Vec2::Zero();
    for (int i = 0; i < n; ++i) {
        const Vec4 a = L * z.next4();
        xs[i] = f.Xi * Vec2(a[0], a[1]);
        mean += xs[i];
    }
    mean /= n;
    for (int j = 0; j < 2; ++j) {
        for (int k = j; k < 2; ++k) {
            double m = 0.0, m2 = 0.0;
            for (const Vec2& x : xs) {
                const double prod = (x[j] - mean[j]) * (x[k] - mean[k]);
                m += prod;
                m2 += prod * prod;
            }
            m /= n;
            const double se = std::sqrt((m2 / n - m * m) / n);
            EXPECT_LT(std::abs(m - cov(j, k)), 3.0 * se) << j << k;
        }
    }
}

TEST(ZeroCouponRate, Values) {
    const ModelParams p = slow();
    EXPECT_NEAR(zero_coupon_rate(p, 0.02, 10.0), 0.02051, 1e-5);
    EXPECT_NEAR(zero_coupon_rate(p, 0.02, 10.0), oracle::zcr_slow_rbar_10, 1e-15);
    EXPECT_NEAR(zero_coupon_rate(p, 0.02, 20.0), oracle::zcr_slow_rbar_20, 1e-15);
    EXPECT_NEAR(zero_coupon_rate(p, 0.02, 30.0), oracle::zcr_slow_rbar_30, 1e-15);
    EXPECT_NEAR(zero_coupon_rate(p, 0.02, 50.0), oracle::zcr_slow_rbar_50, 1e-15);
    EXPECT_NEAR(zero_coupon_rate(p, 0.03, 7.0), oracle::zcr_slow_r003_7, 1e-15);
    EXPECT_NEAR(zero_coupon_rate(p, 0.027, 1e-8), 0.027, 1e-6);
    EXPECT_THROW(zero_coupon_rate(p, 0.02, 0.0), Error);
}

TEST(ZeroCouponRate, FlatCurveWithoutVolatility) {
    ParamValues v = slow().values();
    v.sigma_r = 1e-10;
    const ModelParams p(v);
    for (double tau : {0.5, 10.0, 80.0}) EXPECT_NEAR(zero_coupon_rate(p, v.b, tau), v.b, 1e-15);
}

TEST(BondVolatility, Values) {
    const ModelParams p = slow();
    EXPECT_EQ(bond_volatility(p, 4.0, 4.0), 0.0);
    EXPECT_NEAR(bond_volatility(p, 0.0, 30.0), -0.174701, 1e-6);
    EXPECT_NEAR(bond_volatility(p, 5.0, 35.0), -0.174701, 1e-6);
    EXPECT_EQ(kind_of([&] { bond_volatility(p, 5.0, 4.0); }), ErrorKind::MaturityInPast);
    double prev = 0.0;
    for (double m = 0.25; m <= 100.0; m += 0.25) {
        const double v = std::abs(bond_volatility(p, 0.0, m));
        EXPECT_GT(v, prev);
        prev = v;
    }
}
