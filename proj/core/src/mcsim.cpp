#include "ltmv/mcsim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include <boost/random/normal_distribution.hpp>

#include "ltmv/errors.hpp"
#include "ltmv/quadrature.hpp"

namespace ltmv {

namespace {

// Per-node drift r + f'xi = c + alpha r + beta x, and per-step exposure data.
struct Grid {
    std::size_t n{};
    double h{};
    std::vector<double> c, ar, bx;  // n + 1 nodes
    std::vector<double> fr, fs;     // n steps (left point)
    std::vector<double> comp;       // 0.5 h f'Cf per step
};

Grid make_grid(const ModelParams& p, const MarketState& st, const StrategyPath& strategy,
               std::size_t n) {
    Grid g;
    g.n = n;
    g.h = st.horizon() / static_cast<double>(n);
    g.c.resize(n + 1);
    g.ar.resize(n + 1);
    g.bx.resize(n + 1);
    g.fr.resize(n);
    g.fs.resize(n);
    g.comp.resize(n);
    const double k = p.kappa();
    const double a = p.a();
    const double sr = p.sigma_r();
    const double rho = p.rho();
    for (std::size_t i = 0; i <= n; ++i) {
        const double u = i == n ? st.s() : st.t() + g.h * static_cast<double>(i);
        const Vec2 f = strategy(u);
        if (!std::isfinite(f[0]) || !std::isfinite(f[1])) {
            std::ostringstream os;
            os << "strategy is not finite at u = " << u;
            fail(ErrorKind::SimulationFailure, os.str());
        }
        g.c[i] = f[0] * (k * p.rbar() - a * p.b()) / sr;
        g.ar[i] = 1.0 + f[0] * (a - k) / sr;
        g.bx[i] = f[1] / p.sigma_S();
        if (i < n) {
            g.fr[i] = f[0];
            g.fs[i] = f[1];
            g.comp[i] = 0.5 * g.h * (f[0] * f[0] + 2.0 * rho * f[0] * f[1] + f[1] * f[1]);
        }
    }
    return g;
}

void validate(const MarketState& st, const SimConfig& cfg) {
    require(cfg.n_paths >= 2, ErrorKind::InvalidParameter, "simulation needs at least 2 paths");
    require(!cfg.antithetic || cfg.n_paths % 2 == 0, ErrorKind::InvalidParameter,
            "antithetic sampling needs an even number of paths");
    require(cfg.dt > 0.0 && cfg.dt <= st.horizon() * (1.0 + 1e-12), ErrorKind::InvalidGrid,
            "time step must satisfy 0 < dt <= s - t");
}

}  // namespace

std::size_t step_count(double horizon, double dt) {
    require(dt > 0.0 && horizon > 0.0, ErrorKind::InvalidGrid, "step count needs dt, horizon > 0");
    const double ratio = horizon / dt;
    const double rounded = std::round(ratio);
    const double n = std::abs(ratio - rounded) <= 1e-9 * std::max(1.0, ratio) ? rounded : std::ceil(ratio);
    return static_cast<std::size_t>(std::max(n, 1.0));
}

Mat4 step_covariance(const ModelParams& p, double h) {
    const double k = p.kappa();
    const double al = p.alpha();
    const double rho = p.rho();
    Mat4 S;
    S(0, 0) = psi(2.0 * k, h);
    S(1, 1) = psi(2.0 * al, h);
    S(2, 2) = h;
    S(3, 3) = h;
    S(0, 1) = rho * psi(k + al, h);
    S(0, 2) = psi(k, h);
    S(0, 3) = rho * psi(k, h);
    S(1, 2) = rho * psi(al, h);
    S(1, 3) = psi(al, h);
    S(2, 3) = rho * h;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < i; ++j) S(i, j) = S(j, i);
    }
    return S;
}

Mat4 step_factor(const ModelParams& p, double h) {
    const Mat4 S = step_covariance(p, h);
    const Eigen::LLT<Mat4> llt(S);
    if (llt.info() == Eigen::Success) return llt.matrixL();
    const Eigen::SelfAdjointEigenSolver<Mat4> es(S);
    const Vec4 ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.asDiagonal();
}

Vec4 NormalStream::next4() {
    boost::random::normal_distribution<double> nd;
    return Vec4(nd(eng_), nd(eng_), nd(eng_), nd(eng_));
}

double NormalStream::next() {
    boost::random::normal_distribution<double> nd;
    return nd(eng_);
}

TerminalSamples simulate_terminal(const ModelParams& p, const MarketState& st,
                                  std::span<const StrategyPath> strategies, const SimConfig& cfg) {
    validate(st, cfg);
    require(!strategies.empty(), ErrorKind::InvalidParameter, "no strategy to simulate");
    const std::size_t n = step_count(st.horizon(), cfg.dt);
    const std::size_t m = strategies.size();
    std::vector<Grid> grids;
    grids.reserve(m);
    for (const auto& sp : strategies) grids.push_back(make_grid(p, st, sp, n));
    const double h = grids[0].h;
    const Mat4 L = step_factor(p, h);
    const double er = std::exp(-p.kappa() * h);
    const double ex = std::exp(-p.alpha() * h);
    const double rbar = p.rbar();
    const double xbar = p.xbar();
    const double sr = p.sigma_r();
    const double sx = p.sigma_x();
    const double half_h = 0.5 * h;

    TerminalSamples out;
    out.n_steps = n;
    out.dt = h;
    out.log_return.assign(m, std::vector<double>(cfg.n_paths, 0.0));
    out.r_s.assign(cfg.n_paths, 0.0);
    out.x_s.assign(cfg.n_paths, 0.0);

    const auto run_path = [&](std::size_t path, bool check, std::vector<double>& z) {
        const std::uint64_t stream = cfg.antithetic ? path / 2 : path;
        CounterStream eng(cfg.seed, stream);
        boost::random::normal_distribution<double> nd;
        for (double& v : z) v = nd(eng);
        if (cfg.antithetic && path % 2 == 1) {
            for (double& v : z) v = -v;
        }
        // Correlate in place: z_k <- L z_k.
        for (std::size_t k = 0; k < n; ++k) {
            double* e = z.data() + 4 * k;
            const Vec4 w = L * Vec4(e[0], e[1], e[2], e[3]);
            e[0] = sr * w[0];
            e[1] = -sx * w[1];
            e[2] = w[2];
            e[3] = w[3];
        }
        const double r0 = st.r_t();
        const double x0 = st.x_t();
        for (std::size_t j = 0; j < m; ++j) {
            const Grid& g = grids[j];
            double r = r0;
            double x = x0;
            double X = 0.0;
            double d_prev = g.c[0] + g.ar[0] * r + g.bx[0] * x;
            for (std::size_t k = 0; k < n; ++k) {
                const double* e = z.data() + 4 * k;
                r = rbar + er * (r - rbar) + e[0];
                x = xbar + ex * (x - xbar) + e[1];
                const double d_next = g.c[k + 1] + g.ar[k + 1] * r + g.bx[k + 1] * x;
                X += half_h * (d_prev + d_next) + g.fr[k] * e[2] + g.fs[k] * e[3] - g.comp[k];
                d_prev = d_next;
                if (check && !std::isfinite(X)) {
                    std::ostringstream os;
                    os << "non-finite log-wealth on path " << path << " at step " << k;
                    fail(ErrorKind::SimulationFailure, os.str());
                }
            }
            out.log_return[j][path] = X;
            if (j == 0) {
                out.r_s[path] = r;
                out.x_s[path] = x;
            }
        }
    };

    unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, cfg.n_paths));
    const auto run_range = [&](std::size_t lo, std::size_t hi) {
        std::vector<double> z(4 * n);
        for (std::size_t i = lo; i < hi; ++i) run_path(i, false, z);
    };
    if (threads <= 1) {
        run_range(0, cfg.n_paths);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (cfg.n_paths + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::size_t lo = std::min(cfg.n_paths, chunk * w);
            const std::size_t hi = std::min(cfg.n_paths, lo + chunk);
            pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    std::vector<double> z(4 * n);
    for (std::size_t i = 0; i < cfg.n_paths; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!std::isfinite(out.log_return[j][i])) {
                run_path(i, true, z);
                break;
            }
        }
    }
    return out;
}

SimResult summarize(std::span<const double> x, bool antithetic_pairs) {
    const std::size_t n = x.size();
    require(n >= 2, ErrorKind::InvalidParameter, "need at least 2 samples");
    const double nd = static_cast<double>(n);
    const double mean = quad::pairwise_sum(x) / nd;
    std::vector<double> d2(n), d4(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = x[i] - mean;
        d2[i] = d * d;
        d4[i] = d2[i] * d2[i];
    }
    const double m2 = quad::pairwise_sum(d2) / nd;
    const double m4 = quad::pairwise_sum(d4) / nd;

    SimResult res;
    res.n_paths = n;
    res.mean_log = mean;
    res.var_log = m2 * nd / (nd - 1.0);
    const double var_of_var = (m4 - (nd - 3.0) / (nd - 1.0) * m2 * m2) / nd;
    res.se_var = std::sqrt(std::max(var_of_var, 0.0));

    if (antithetic_pairs) {
        require(n % 2 == 0, ErrorKind::InvalidParameter, "antithetic sample must have even size");
        const std::size_t np = n / 2;
        std::vector<double> pair(np);
        for (std::size_t i = 0; i < np; ++i) pair[i] = 0.5 * (x[2 * i] + x[2 * i + 1]);
        std::vector<double> pd(np);
        for (std::size_t i = 0; i < np; ++i) pd[i] = (pair[i] - mean) * (pair[i] - mean);
        const double pv = quad::pairwise_sum(pd) / (static_cast<double>(np) - 1.0);
        res.se_mean = std::sqrt(pv / static_cast<double>(np));
    } else {
        res.se_mean = std::sqrt(res.var_log / nd);
    }
    res.n_effective = res.se_mean > 0.0 ? res.var_log / (res.se_mean * res.se_mean) : nd;
    return res;
}

std::vector<SimResult> simulate_many(const ModelParams& p, const MarketState& st,
                                     std::span<const StrategyPath> strategies, const SimConfig& cfg) {
    const TerminalSamples ts = simulate_terminal(p, st, strategies, cfg);
    std::vector<SimResult> out;
    out.reserve(strategies.size());
    for (const auto& x : ts.log_return) {
        SimResult res = summarize(x, cfg.antithetic);
        res.n_steps = ts.n_steps;
        res.dt = ts.dt;
        out.push_back(res);
    }
    return out;
}

SimResult simulate(const ModelParams& p, const MarketState& st, const StrategyPath& strategy,
                   const SimConfig& cfg) {
    return simulate_many(p, st, std::span<const StrategyPath>(&strategy, 1), cfg).front();
}

SchemeMoments scheme_moments(const ModelParams& p, const MarketState& st,
                             const StrategyPath& strategy, std::size_t n) {
    require(n >= 1, ErrorKind::InvalidGrid, "need at least one step");
    const Grid g = make_grid(p, st, strategy, n);
    const Mat4 S = step_covariance(p, g.h);
    const double er = std::exp(-p.kappa() * g.h);
    const double ex = std::exp(-p.alpha() * g.h);

    // Node weights of r_k and x_k in the trapezoid sum.
    std::vector<double> wr(n + 1), wx(n + 1);
    quad::CompensatedSum mean;
    for (std::size_t k = 0; k <= n; ++k) {
        const double w = (k == 0 || k == n) ? 0.5 * g.h : g.h;
        wr[k] = w * g.ar[k];
        wx[k] = w * g.bx[k];
        const double tk = g.h * static_cast<double>(k);
        const double er_k = p.rbar() + std::exp(-p.kappa() * tk) * (st.r_t() - p.rbar());
        const double ex_k = p.xbar() + std::exp(-p.alpha() * tk) * (st.x_t() - p.xbar());
        mean.add(w * g.c[k] + wr[k] * er_k + wx[k] * ex_k);
        if (k < n) mean.add(-g.comp[k]);
    }

    // G_m = sum_{k >= m} w_k exp(-kappa (k - m) h), accumulated backwards.
    quad::CompensatedSum var;
    double Gr = 0.0;
    double Gx = 0.0;
    for (std::size_t j = n; j-- > 0;) {
        Gr = wr[j + 1] + er * Gr;
        Gx = wx[j + 1] + ex * Gx;
        const Vec4 v(p.sigma_r() * Gr, -p.sigma_x() * Gx, g.fr[j], g.fs[j]);
        var.add(v.dot(S * v));
    }
    return {mean.value(), var.value()};
}

SweepReport discretization_sweep(const ModelParams& p, const MarketState& st,
                                 const StrategyPath& strategy, const SimConfig& cfg,
                                 std::span<const double> dts, const SweepOptions& opt) {
    require(dts.size() >= 2, ErrorKind::InvalidGrid, "sweep needs at least two step sizes");
    for (std::size_t i = 1; i < dts.size(); ++i) {
        require(dts[i] < dts[i - 1], ErrorKind::InvalidGrid, "sweep step sizes must decrease");
    }
    SweepReport rep;
    if (opt.reference) {
        rep.reference_mean = opt.reference->mean;
        rep.reference_var = opt.reference->var;
    } else {
        const RiskPremiumFrame frame = build_frame(p, st);
        rep.reference_mean = horizon_mean_quadrature(frame, p, st, strategy);
        rep.reference_var = horizon_variance_quadrature(frame, p, st, strategy);
    }
    for (const double dt : dts) {
        SweepRow row;
        row.n_steps = step_count(st.horizon(), dt);
        row.dt = st.horizon() / static_cast<double>(row.n_steps);
        row.scheme = scheme_moments(p, st, strategy, row.n_steps);
        row.bias_mean = row.scheme.mean - rep.reference_mean;
        row.bias_var = row.scheme.var - rep.reference_var;
        if (opt.run_monte_carlo) {
            SimConfig c = cfg;
            c.dt = dt;
            row.mc = simulate(p, st, strategy, c);
        }
        rep.rows.push_back(row);
    }
    for (std::size_t i = 1; i < rep.rows.size(); ++i) {
        const auto& a = rep.rows[i - 1];
        const auto& b = rep.rows[i];
        const double lr = std::log(b.dt / a.dt);
        rep.ratio_mean.push_back(std::abs(b.bias_mean) / std::abs(a.bias_mean));
        rep.ratio_var.push_back(std::abs(b.bias_var) / std::abs(a.bias_var));
        rep.order_mean.push_back(std::log(rep.ratio_mean.back()) / lr);
        rep.order_var.push_back(std::log(rep.ratio_var.back()) / lr);
    }
    return rep;
}

}  // namespace ltmv
