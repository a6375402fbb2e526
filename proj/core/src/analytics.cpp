#include "ltmv/analytics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "ltmv/errors.hpp"

namespace ltmv {

namespace {

constexpr double kImagTol = 1e-10;

struct Block {
    CMat2 Q;
    CMat2 Q_inv;
    CVec2 lambda;
    Mat2 S;
};

std::array<Block, 3> blocks(const SpectralSolution& sol) {
    std::array<Block, 3> out;
    out[0] = {CMat2::Identity(), CMat2::Identity(), CVec2::Zero(), Mat2::Zero()};
    for (int i = 1; i <= 2; ++i) {
        out[i] = {sol.Q(i), sol.Q_inv(i), sol.eigenvalues(i), sol.S(i)};
    }
    return out;
}

CVec2 int_exp(const CVec2& lambda, double tau) {
    return CVec2(tau * phi1(lambda[0] * tau), tau * phi1(lambda[1] * tau));
}

CVec2 exp_diag(const CVec2& lambda, double tau) {
    return CVec2(std::exp(lambda[0] * tau), std::exp(lambda[1] * tau));
}

double real_part(Complex z, double scale, const char* what) {
    if (!(std::abs(z.imag()) <= kImagTol * std::max(std::abs(z.real()), scale))) {
        std::ostringstream os;
        os << what << " has imaginary residue " << z.imag();
        fail(ErrorKind::InternalConsistency, os.str());
    }
    return z.real();
}

Vec2 gamma_inv(const RiskPremiumFrame& frame, const Vec2& v) {
    return Vec2(v[0] / frame.Gamma(0, 0), v[1] / frame.Gamma(1, 1));
}

}  // namespace

HorizonMoments HorizonMoments::from(double mean_log, double var_log, double horizon) {
    require(horizon > 0.0, ErrorKind::InvalidHorizon, "horizon must be positive");
    HorizonMoments m;
    m.mean_log = mean_log;
    m.var_log = var_log;
    m.ann_mean = mean_log / horizon;
    m.ann_vol = std::sqrt(std::max(var_log, 0.0) / horizon);
    return m;
}

MomentInputs MomentInputs::from(const OptimalStrategy& s) {
    return {s.params(), s.state(), s.frame(), s.spectral(), s.k1(), s.k2(), s.q1(), s.q2()};
}

Complex phi1(Complex z) {
    if (std::abs(z) < 1e-3) {
        return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0)));
    }
    const double x = z.real();
    const double y = z.imag();
    const double sh = std::sin(0.5 * y);
    const Complex em1(std::expm1(x) * std::cos(y) - 2.0 * sh * sh, std::exp(x) * std::sin(y));
    return em1 / z;
}

CMat2 kmatrix(const CVec2& dbar, const CVec2& dund, double tau) {
    require(tau >= 0.0, ErrorKind::DomainError, "kmatrix needs tau >= 0");
    CMat2 K;
    for (int l = 0; l < 2; ++l) {
        for (int m = 0; m < 2; ++m) {
            const Complex d = dbar[l] + dund[m];
            K(l, m) = std::abs(d) * tau < 1e-12 ? Complex(tau, 0.0) : tau * phi1(d * tau);
        }
    }
    return K;
}

Mat2 kmatrix(const Vec2& dbar, const Vec2& dund, double tau) {
    return kmatrix(CVec2(dbar.cast<Complex>()), CVec2(dund.cast<Complex>()), tau).real();
}

Mat2 psi_diag(const Vec2& d, double tau) { return diag2(psi(d[0], tau), psi(d[1], tau)); }

MeanTerms closed_form_mean_terms(const MomentInputs& in) {
    const ModelParams& p = in.params;
    const RiskPremiumFrame& fr = in.frame;
    const double tau = in.state.horizon();
    const auto blk = blocks(in.sol);
    const Mat2& G = fr.Gamma;
    const Mat2 Gc = G;
    const std::array<Vec2, 3> q{in.k1 + gamma_inv(fr, in.k2), in.q1, in.q2};

    MeanTerms out;
    out.cash = p.rbar() * tau + psi(p.kappa(), tau) * (in.state.r_t() - p.rbar());

    const CVec2 xibar = fr.xibar.cast<Complex>();
    const CVec2 xi_t = fr.xi_t.cast<Complex>();
    const CMat2 exp_mG = diag2(std::exp(-p.kappa() * tau), std::exp(-p.alpha() * tau)).cast<Complex>();

    std::array<CMat2, 3> P;
    std::array<CVec2, 3> w;
    Complex linear = 0.0;
    double scale = 0.0;
    for (int i = 0; i < 3; ++i) {
        const CMat2 GS = (Gc + blk[i].S).cast<Complex>();
        P[i] = GS * blk[i].Q;
        w[i] = blk[i].Q_inv * q[i].cast<Complex>();
        const Complex l_bar = xibar.dot(P[i] * int_exp(blk[i].lambda, tau).cwiseProduct(w[i]));
        const CVec2 e_s = blk[i].Q * exp_diag(blk[i].lambda, tau).cwiseProduct(w[i]);
        const Complex l_t = xi_t.dot(e_s - exp_mG * q[i].cast<Complex>());
        linear += l_bar + l_t;
        scale += std::abs(l_bar) + std::abs(l_t);
    }
    out.linear = real_part(linear, 1e-12 * scale, "closed-form mean (linear terms)");

    const CMat2 C = fr.C.cast<Complex>();
    Complex quad = 0.0;
    scale = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const CMat2 H = P[i].transpose() * C * P[j];
            const CMat2 K = kmatrix(blk[i].lambda, blk[j].lambda, tau);
            const Complex term = w[i].transpose() * H.cwiseProduct(K) * w[j];
            quad += term;
            scale += std::abs(term);
        }
    }
    out.quadratic = -0.5 * real_part(quad, 1e-12 * scale, "closed-form mean (quadratic terms)");
    return out;
}

double closed_form_mean(const MomentInputs& in) { return closed_form_mean_terms(in).total(); }

double closed_form_variance(const MomentInputs& in) {
    const RiskPremiumFrame& fr = in.frame;
    const double tau = in.state.horizon();
    const auto blk = blocks(in.sol);
    const Mat2& G = fr.Gamma;
    const Mat2& X = fr.Xi;
    const Mat2& C = fr.C;
    const CMat2 Cc = C.cast<Complex>();

    const Vec2 c = -fr.eps1;
    const std::array<Vec2, 3> qt{in.k1 + gamma_inv(fr, in.k2 + fr.eps1), in.q1, in.q2};
    const Vec2 q_hat = qt[0] + qt[1] + qt[2];
    const Vec2 minus_gamma(-G(0, 0), -G(1, 1));

    std::array<CMat2, 3> R;
    std::array<CVec2, 3> w;
    for (int i = 0; i < 3; ++i) {
        R[i] = (G + X + blk[i].S).cast<Complex>() * blk[i].Q;
        w[i] = blk[i].Q_inv * qt[i].cast<Complex>();
    }

    double scale = 0.0;
    Complex total = 0.0;
    auto add = [&](Complex v) {
        total += v;
        scale += std::abs(v);
    };

    add(c.dot(C * c) * tau);

    const CVec2 Cc_c = Cc * c.cast<Complex>();
    for (int i = 0; i < 3; ++i) {
        add(2.0 * Cc_c.dot(R[i] * int_exp(blk[i].lambda, tau).cwiseProduct(w[i])));
    }
    add(-2.0 * c.dot(C * X * psi_diag(Vec2(G(0, 0), G(1, 1)), tau) * q_hat));

    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const CMat2 H = R[i].transpose() * Cc * R[j];
            add(w[i].transpose() * H.cwiseProduct(kmatrix(blk[i].lambda, blk[j].lambda, tau)) * w[j]);
        }
    }

    const CVec2 q_hat_c = q_hat.cast<Complex>();
    const CVec2 minus_gamma_c = minus_gamma.cast<Complex>();
    for (int i = 0; i < 3; ++i) {
        const CMat2 Gi = R[i].transpose() * Cc * X.cast<Complex>();
        add(-2.0 * (w[i].transpose() * Gi.cwiseProduct(kmatrix(blk[i].lambda, minus_gamma_c, tau)) *
                    q_hat_c)(0, 0));
    }

    const Mat2 C_xi = X * C * X;
    add(q_hat.dot(C_xi.cwiseProduct(kmatrix(minus_gamma, minus_gamma, tau)) * q_hat));

    const double var = real_part(total, 1e-12 * scale, "closed-form variance");
    if (var < -1e-10 * std::max(scale, 1.0)) {
        std::ostringstream os;
        os << "closed-form variance is negative (" << var << ")";
        fail(ErrorKind::InternalConsistency, os.str());
    }
    return std::max(var, 0.0);
}

double closed_form_mean(const OptimalStrategy& s) { return closed_form_mean(MomentInputs::from(s)); }

double closed_form_variance(const OptimalStrategy& s) {
    return closed_form_variance(MomentInputs::from(s));
}

HorizonMoments closed_form_moments(const OptimalStrategy& s) {
    const MomentInputs in = MomentInputs::from(s);
    return HorizonMoments::from(closed_form_mean(in), closed_form_variance(in), s.state().horizon());
}

HorizonMoments infinite_nu_moments(const ModelParams& p, const MarketState& st) {
    const double tau = st.horizon();
    const double k = p.kappa();
    const double a = p.a();
    const double dev = st.r_t() - p.rbar();
    const double cash = p.rbar() * tau + psi(k, tau) * dev;
    const double premium = (p.rbar() - p.b()) * (tau - psi(a, tau));
    const double overlap = psi(k, tau) - (std::exp(-k * tau) - std::exp(-a * tau)) / (a - k);
    const double drift = dev * (a - k) / a * overlap;
    const double convexity = 0.5 * p.sigma_r() * p.sigma_r() * upsilon(a, tau);
    return HorizonMoments::from(cash - premium - drift - convexity, 0.0, tau);
}

std::vector<double> log_spaced_nu(double lo, double hi, int n) {
    require(lo > 0.0 && hi >= lo && n >= 1, ErrorKind::InvalidGrid,
            "log grid needs 0 < lo <= hi and n >= 1");
    std::vector<double> out(static_cast<std::size_t>(n));
    if (n == 1) {
        out[0] = hi;
        return out;
    }
    const double l0 = std::log(hi);
    const double l1 = std::log(lo);
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = std::exp(l0 + (l1 - l0) * i / (n - 1));
    }
    out.front() = hi;
    out.back() = lo;
    return out;
}

std::vector<double> default_nu_grid() {
    std::vector<double> grid{kInfiniteNu};
    const auto finite = log_spaced_nu(1e-3, 1e3, 50);
    grid.insert(grid.end(), finite.begin(), finite.end());
    return grid;
}

FrontierReport efficient_frontier(const ModelParams& p, const MarketState& st,
                                  std::span<const double> nu_grid) {
    require(!nu_grid.empty(), ErrorKind::InvalidGrid, "risk-aversion grid is empty");
    for (std::size_t i = 0; i < nu_grid.size(); ++i) {
        require(nu_grid[i] > 0.0, ErrorKind::InvalidGrid, "risk-aversion grid must be positive");
        if (i > 0) {
            require(nu_grid[i] < nu_grid[i - 1], ErrorKind::InvalidGrid,
                    "risk-aversion grid must be strictly descending");
        }
    }
    FrontierReport report;
    for (const double nu : nu_grid) {
        FrontierPoint pt;
        pt.nu = nu;
        try {
            if (std::isinf(nu)) {
                const HorizonMoments m = infinite_nu_moments(p, st);
                pt.ann_vol = m.ann_vol;
                pt.ann_mean = m.ann_mean;
                pt.mean_log = m.mean_log;
                pt.var_log = m.var_log;
            } else {
                const OptimalStrategy opt(p, st, nu);
                const HorizonMoments m = closed_form_moments(opt);
                pt.ann_vol = m.ann_vol;
                pt.ann_mean = m.ann_mean;
                pt.mean_log = m.mean_log;
                pt.var_log = m.var_log;
                pt.branch = to_string(opt.spectral().branch);
                pt.discriminant = opt.spectral().D;
                pt.boundary_residual = opt.boundary().residual;
                pt.boundary_condition = opt.boundary().condition;
            }
            report.points.push_back(pt);
        } catch (const Error& e) {
            if (is_input_error(e.kind())) throw;
            report.failures.push_back({nu, e.what()});
        }
    }
    return report;
}

TargetVolPoint frontier_at_vol(const ModelParams& p, const MarketState& st, double target_vol) {
    require(target_vol > 0.0, ErrorKind::DomainError, "target volatility must be positive");
    const auto vol_at = [&](double log_nu) {
        const OptimalStrategy opt(p, st, std::exp(log_nu));
        return closed_form_moments(opt);
    };
    double lo = std::log(1e-6);
    double hi = std::log(1e8);
    const HorizonMoments m_lo = vol_at(lo);
    const HorizonMoments m_hi = vol_at(hi);
    require(m_lo.ann_vol >= target_vol && m_hi.ann_vol <= target_vol, ErrorKind::DomainError,
            "target volatility is outside the frontier's range");
    HorizonMoments mid_m = m_lo;
    double mid = lo;
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        mid = 0.5 * (lo + hi);
        mid_m = vol_at(mid);
        if (mid_m.ann_vol > target_vol) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {std::exp(mid), mid_m.ann_vol, mid_m.ann_mean};
}

std::vector<AllocationRow> allocation_table(const StrategyPath& strategy, int n_points) {
    require(n_points >= 2, ErrorKind::InvalidGrid, "allocation table needs at least 2 points");
    std::vector<AllocationRow> rows;
    rows.reserve(static_cast<std::size_t>(n_points));
    const double t = strategy.t;
    const double s = strategy.s;
    for (int i = 0; i < n_points; ++i) {
        const double u = i == n_points - 1 ? s : t + (s - t) * i / (n_points - 1);
        const Vec2 f = strategy(u);
        rows.push_back({u, f[0], f[1]});
    }
    return rows;
}

std::vector<AllocationRow> allocation_table(const OptimalStrategy& strategy, int n_points) {
    return allocation_table(strategy.path(), n_points);
}

}  // namespace ltmv
