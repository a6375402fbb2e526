#include "ltmv_cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ltmv/analytics.hpp"
#include "ltmv/errors.hpp"
#include "ltmv/mcsim.hpp"
#include "ltmv_cli/format.hpp"
#include "ltmv_cli/params_io.hpp"

namespace ltmv::cli {

namespace {

struct RunConfig {
    std::string params_file;
    std::optional<double> r0;
    std::optional<double> x0;
    double t = 0.0;
    double s = 10.0;
    std::optional<double> nu;
    std::string nu_grid;
    bool infinite_nu = false;
    int n_points = 101;
    std::size_t paths = 200000;
    double dt = 1.0 / 252.0;
    std::uint64_t seed = 20170501;
    unsigned threads = 0;
    std::string out;
    std::string format;
    std::optional<double> bond_maturity;
    std::string strategy_csv;
    double corrupt_k2 = 1.0;
};

struct Market {
    ModelParams params;
    MarketState state;
};

Market load_market(const RunConfig& cfg) {
    if (cfg.params_file.empty()) throw ConfigError("--params is required");
    const ModelParams p(read_params_file(cfg.params_file));
    const MarketState st(cfg.r0.value_or(p.rbar()), cfg.x0.value_or(p.xbar()), cfg.t, cfg.s);
    return {p, st};
}

double require_nu(const RunConfig& cfg) {
    if (cfg.infinite_nu) return kInfiniteNu;
    if (!cfg.nu) throw ConfigError("--nu or --infinite-nu is required");
    return *cfg.nu;
}

std::string format_or(const RunConfig& cfg, const char* fallback, bool csv_allowed) {
    const std::string f = cfg.format.empty() ? fallback : cfg.format;
    if (f != "csv" && f != "json") throw ConfigError("--format must be csv or json");
    if (f == "csv" && !csv_allowed) throw ConfigError("this command only emits json");
    return f;
}

Json params_json(const ModelParams& p) {
    const ParamValues& v = p.values();
    return Json{{"kappa", v.kappa},   {"rbar", v.rbar},       {"sigma_r", v.sigma_r}, {"a", v.a},
                {"b", v.b},           {"alpha", v.alpha},     {"xbar", v.xbar},       {"sigma_x", v.sigma_x},
                {"sigma_S", v.sigma_S}, {"rho", v.rho}};
}

Json horizon_json(const MarketState& st) {
    return Json{{"t", st.t()}, {"s", st.s()}, {"r_t", st.r_t()}, {"x_t", st.x_t()}};
}

std::vector<double> parse_nu_grid(const std::string& spec) {
    std::vector<double> grid;
    if (spec.rfind("log:", 0) == 0) {
        std::vector<std::string> parts;
        std::stringstream ss(spec.substr(4));
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(item);
        if (parts.size() != 3) throw ConfigError("--nu-grid log spec must be log:lo:hi:n");
        const double lo = parse_number(parts[0], "--nu-grid");
        const double hi = parse_number(parts[1], "--nu-grid");
        const double n = parse_number(parts[2], "--nu-grid");
        if (n < 1 || n != std::floor(n)) throw ConfigError("--nu-grid point count must be a positive integer");
        grid = log_spaced_nu(lo, hi, static_cast<int>(n));
    } else {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto b = item.find_first_not_of(' ');
            const auto e = item.find_last_not_of(' ');
            if (b == std::string::npos) throw ConfigError("--nu-grid has an empty entry");
            grid.push_back(parse_number(item.substr(b, e - b + 1), "--nu-grid"));
        }
        std::sort(grid.begin(), grid.end(), std::greater<>());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    }
    if (grid.empty()) throw ConfigError("--nu-grid is empty");
    return grid;
}

StrategyPath strategy_for(const Market& m, double nu, std::optional<OptimalStrategy>& holder) {
    if (std::isinf(nu)) return infinite_nu_path(m.params, m.state);
    holder.emplace(m.params, m.state, nu);
    return holder->path();
}

std::string allocation_csv(const std::vector<AllocationRow>& rows, const ModelParams& p,
                           std::optional<double> bond_maturity) {
    std::string out = bond_maturity ? "u,f_r,f_S,w_equity,w_bond\n" : "u,f_r,f_S\n";
    for (const auto& r : rows) {
        out += format_number(r.u) + "," + format_number(r.f_r) + "," + format_number(r.f_S);
        if (bond_maturity) {
            out += "," + format_number(r.f_S / p.sigma_S()) + "," +
                   format_number(r.f_r / bond_volatility(p, r.u, *bond_maturity));
        }
        out += "\n";
    }
    return out;
}

// ---- commands ---------------------------------------------------------------

struct Outcome {
    std::string text;
    int code = kOk;
};

Outcome cmd_frontier(const RunConfig& cfg, std::ostream& err) {
    const std::string fmt = format_or(cfg, "csv", true);
    const Market m = load_market(cfg);
    const std::vector<double> grid = cfg.nu_grid.empty() ? default_nu_grid() : parse_nu_grid(cfg.nu_grid);
    const FrontierReport rep = efficient_frontier(m.params, m.state, grid);
    if (!rep.failures.empty()) {
        for (const auto& f : rep.failures) err << "error: nu=" << format_number(f.nu) << ": " << f.message << "\n";
        return {{}, kNumericError};
    }
    if (fmt == "csv") {
        std::string out = "nu,ann_vol,ann_mean\n";
        for (const auto& pt : rep.points) {
            out += format_number(pt.nu) + "," + format_number(pt.ann_vol) + "," + format_number(pt.ann_mean) + "\n";
        }
        return {out};
    }
    Json points = Json::array();
    for (const auto& pt : rep.points) {
        Json diag = Json::object();
        if (!pt.branch.empty()) {
            diag = Json{{"branch", pt.branch},
                        {"discriminant", pt.discriminant},
                        {"boundary_residual", pt.boundary_residual},
                        {"boundary_condition", pt.boundary_condition}};
        }
        points.push_back(Json{{"nu", pt.nu},
                              {"ann_vol", pt.ann_vol},
                              {"ann_mean", pt.ann_mean},
                              {"diagnostics", diag}});
    }
    const Json doc{{"params", params_json(m.params)}, {"horizon", horizon_json(m.state)}, {"points", points}};
    return {to_json_text(doc)};
}

Outcome cmd_allocation(const RunConfig& cfg) {
    const std::string fmt = format_or(cfg, "csv", true);
    const Market m = load_market(cfg);
    const double nu = require_nu(cfg);
    if (cfg.bond_maturity && !(*cfg.bond_maturity > m.state.s())) {
        throw ConfigError("--bond-maturity must lie after the horizon --s");
    }
    std::optional<OptimalStrategy> holder;
    const StrategyPath path = strategy_for(m, nu, holder);
    const auto rows = allocation_table(path, cfg.n_points);
    if (fmt == "csv") return {allocation_csv(rows, m.params, cfg.bond_maturity)};
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(Json{{"u", r.u}, {"f_r", r.f_r}, {"f_S", r.f_S}});
    const Json doc{{"nu", nu}, {"horizon", horizon_json(m.state)}, {"rows", arr}};
    return {to_json_text(doc)};
}

Outcome cmd_moments(const RunConfig& cfg) {
    const std::string fmt = format_or(cfg, "csv", true);
    const Market m = load_market(cfg);
    const double nu = require_nu(cfg);
    std::optional<OptimalStrategy> holder;
    const StrategyPath path = strategy_for(m, nu, holder);
    const HorizonMoments cf = holder ? closed_form_moments(*holder) : infinite_nu_moments(m.params, m.state);
    const RiskPremiumFrame frame = build_frame(m.params, m.state);
    const QuadratureValue qm = horizon_mean_quadrature_detail(frame, m.params, m.state, path);
    const QuadratureValue qv = horizon_variance_quadrature_detail(frame, m.params, m.state, path);
    if (fmt == "csv") {
        std::string out = "nu,mean_log,var_log,ann_mean,ann_vol,quad_mean_log,quad_var_log\n";
        out += format_number(nu) + "," + format_number(cf.mean_log) + "," + format_number(cf.var_log) + "," +
               format_number(cf.ann_mean) + "," + format_number(cf.ann_vol) + "," + format_number(qm.value) + "," +
               format_number(qv.value) + "\n";
        return {out};
    }
    const Json doc{{"nu", nu},
                   {"horizon", horizon_json(m.state)},
                   {"closed_form",
                    Json{{"mean_log", cf.mean_log}, {"var_log", cf.var_log}, {"ann_mean", cf.ann_mean}, {"ann_vol", cf.ann_vol}}},
                   {"quadrature",
                    Json{{"mean_log", qm.value}, {"var_log", qv.value}, {"mean_error", qm.error_estimate}, {"var_error", qv.error_estimate}}}};
    return {to_json_text(doc)};
}

Json gate(const std::string& name, bool pass, Json detail) {
    return Json{{"name", name}, {"pass", pass}, {"detail", std::move(detail)}};
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

Json roundtrip_gate(const RunConfig& cfg, const Market& m, const StrategyPath& path) {
    std::ifstream in(cfg.strategy_csv);
    if (!in) throw ConfigError("cannot open strategy file '" + cfg.strategy_csv + "'");
    std::string header;
    std::getline(in, header);
    const auto cols = split_csv_line(header);
    if (cols.size() < 3 || cols[0] != "u" || cols[1] != "f_r" || cols[2] != "f_S") {
        throw ConfigError(cfg.strategy_csv + ": header must start with u,f_r,f_S");
    }
    std::vector<std::array<std::string, 3>> fields;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != cols.size()) throw ConfigError(cfg.strategy_csv + ": ragged row");
        fields.push_back({f[0], f[1], f[2]});
    }
    if (fields.size() < 2) throw ConfigError(cfg.strategy_csv + ": needs at least two rows");

    std::size_t reformat_mismatch = 0;
    for (const auto& row : fields) {
        for (const auto& cell : row) {
            if (format_number(parse_number(cell, cfg.strategy_csv)) != cell) ++reformat_mismatch;
        }
    }
    const auto rows = allocation_table(path, static_cast<int>(fields.size()));
    std::size_t value_mismatch = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::array<std::string, 3> expect{format_number(rows[i].u), format_number(rows[i].f_r),
                                                format_number(rows[i].f_S)};
        if (expect != fields[i]) ++value_mismatch;
    }
    (void)m;
    const bool pass = reformat_mismatch == 0 && value_mismatch == 0;
    return gate("strategy_csv_roundtrip", pass,
                Json{{"rows", fields.size()}, {"reformat_mismatches", reformat_mismatch}, {"value_mismatches", value_mismatch}});
}

Outcome cmd_validate(const RunConfig& cfg) {
    format_or(cfg, "json", false);
    const Market m = load_market(cfg);
    const double nu = require_nu(cfg);
    std::optional<OptimalStrategy> holder;
    const StrategyPath path = strategy_for(m, nu, holder);

    HorizonMoments cf;
    if (holder) {
        const OptimalStrategy used = holder->with_scaled_k2(cfg.corrupt_k2);
        const MomentInputs in = MomentInputs::from(used);
        cf = HorizonMoments::from(closed_form_mean(in), closed_form_variance(in), m.state.horizon());
    } else {
        cf = infinite_nu_moments(m.params, m.state);
    }
    const RiskPremiumFrame frame = build_frame(m.params, m.state);
    const QuadratureValue qm = horizon_mean_quadrature_detail(frame, m.params, m.state, path);
    const QuadratureValue qv = horizon_variance_quadrature_detail(frame, m.params, m.state, path);

    SimConfig sc;
    sc.n_paths = cfg.paths;
    sc.dt = cfg.dt;
    sc.seed = cfg.seed;
    sc.threads = cfg.threads;
    const SimResult mc = simulate(m.params, m.state, path, sc);

    const auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); };
    const double rel_tol = 1e-6;
    const double qv_scale = std::max(std::abs(qv.value), 1e-12);
    Json gates = Json::array();
    gates.push_back(gate("closed_vs_quadrature_mean", rel(cf.mean_log, qm.value) <= rel_tol,
                         Json{{"relative_error", rel(cf.mean_log, qm.value)}, {"tolerance", rel_tol}}));
    const double var_err = std::abs(cf.var_log - qv.value) / qv_scale;
    gates.push_back(gate("closed_vs_quadrature_var", var_err <= rel_tol,
                         Json{{"relative_error", var_err}, {"tolerance", rel_tol}}));
    const double z_mean = (mc.mean_log - cf.mean_log) / mc.se_mean;
    const double z_var = mc.se_var > 0.0 ? (mc.var_log - cf.var_log) / mc.se_var
                                         : (mc.var_log == cf.var_log ? 0.0 : HUGE_VAL);
    gates.push_back(gate("closed_vs_monte_carlo_mean", std::abs(z_mean) <= 3.0,
                         Json{{"standard_errors", z_mean}, {"limit", 3.0}}));
    gates.push_back(gate("closed_vs_monte_carlo_var", std::abs(z_var) <= 3.0,
                         Json{{"standard_errors", z_var}, {"limit", 3.0}}));
    if (!cfg.strategy_csv.empty()) gates.push_back(roundtrip_gate(cfg, m, path));

    bool pass = true;
    for (const auto& g : gates) pass = pass && g["pass"].get<bool>();

    const Json doc{{"case", Json{{"params", params_json(m.params)},
                                 {"horizon", horizon_json(m.state)},
                                 {"nu", nu},
                                 {"paths", cfg.paths},
                                 {"dt", mc.dt},
                                 {"steps", mc.n_steps},
                                 {"seed", cfg.seed}}},
                   {"closed_form", Json{{"mean_log", cf.mean_log}, {"var_log", cf.var_log}}},
                   {"quadrature", Json{{"mean_log", qm.value}, {"var_log", qv.value},
                                       {"mean_error", qm.error_estimate}, {"var_error", qv.error_estimate}}},
                   {"monte_carlo", Json{{"mean_log", mc.mean_log}, {"var_log", mc.var_log},
                                        {"se_mean", mc.se_mean}, {"se_var", mc.se_var}}},
                   {"gates", gates},
                   {"pass", pass}};
    return {to_json_text(doc), pass ? kOk : kGateFailure};
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json matrix_json(const Mat2& M) {
    return Json::array({Json::array({M(0, 0), M(0, 1)}), Json::array({M(1, 0), M(1, 1)})});
}

Outcome cmd_solvents(const RunConfig& cfg) {
    format_or(cfg, "json", false);
    const Market m = load_market(cfg);
    if (!cfg.nu) throw ConfigError("--nu is required");
    const double nu = *cfg.nu;
    const RiskPremiumFrame frame = build_frame(m.params, m.state);
    const ElCoefficients el = el_coefficients(frame, m.params, m.state, nu);
    const LambdaMatrixCoeffs k = LambdaMatrixCoeffs::from(el);
    const SpectralSolution sol = solvents(k);

    // Completeness: eigenvalues of S1 and S2 against +-lambda.
    double mismatch = 0.0;
    for (int which = 1; which <= 2; ++which) {
        Eigen::EigenSolver<Mat2> es(sol.S(which));
        const CVec2 got = es.eigenvalues();
        const CVec2 want = sol.eigenvalues(which);
        const double direct = std::max(std::abs(got[0] - want[0]), std::abs(got[1] - want[1]));
        const double swapped = std::max(std::abs(got[0] - want[1]), std::abs(got[1] - want[0]));
        mismatch = std::max(mismatch, std::min(direct, swapped));
    }
    const Json doc{{"nu", nu},
                   {"discriminant", sol.D},
                   {"branch", to_string(sol.branch)},
                   {"lambda_sq", Json::array({complex_json(sol.lambda_sq[0]), complex_json(sol.lambda_sq[1])})},
                   {"lambda", Json::array({complex_json(sol.Lambda(0, 0)), complex_json(sol.Lambda(1, 1))})},
                   {"S1", matrix_json(sol.S1)},
                   {"S2", matrix_json(sol.S2)},
                   {"residual_S1", solvent_residual(k, sol.S1)},
                   {"residual_S2", solvent_residual(k, sol.S2)},
                   {"scale_S1", solvent_scale(k, sol.S1)},
                   {"scale_S2", solvent_scale(k, sol.S2)},
                   {"imag_residue", sol.imag_residue},
                   {"eigenvalue_mismatch", mismatch}};
    return {to_json_text(doc)};
}

void add_market_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--params", cfg.params_file, "Market parameter file (key=value)")->envname("LTMV_PARAMS");
    sub->add_option("--r0", cfg.r0, "Initial short rate (default: rbar)")->envname("LTMV_R0");
    sub->add_option("--x0", cfg.x0, "Initial surplus return (default: xbar)")->envname("LTMV_X0");
    sub->add_option("--t", cfg.t, "Start date in years")->envname("LTMV_T");
    sub->add_option("--s", cfg.s, "Horizon date in years")->envname("LTMV_S");
    sub->add_option("--out", cfg.out, "Output file (default: stdout)")->envname("LTMV_OUT");
    sub->add_option("--format", cfg.format, "csv or json")->envname("LTMV_FORMAT");
}

void add_nu_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--nu", cfg.nu, "Risk aversion")->envname("LTMV_NU");
    sub->add_flag("--infinite-nu", cfg.infinite_nu, "Use the infinite risk-aversion limit")->envname("LTMV_INFINITE_NU");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mean-variance optimal deterministic allocation in a three-factor market", "ltmv"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* frontier = app.add_subcommand("frontier", "Efficient frontier over a risk-aversion grid");
    add_market_options(frontier, cfg);
    frontier->add_option("--nu-grid", cfg.nu_grid, "log:lo:hi:n or a comma list; 'inf' allowed")->envname("LTMV_NU_GRID");

    auto* allocation = app.add_subcommand("allocation", "Optimal factor allocation path");
    add_market_options(allocation, cfg);
    add_nu_options(allocation, cfg);
    allocation->add_option("--n-points", cfg.n_points, "Grid points on [t, s]")->envname("LTMV_N_POINTS");
    allocation->add_option("--bond-maturity", cfg.bond_maturity, "Add equity/bond weight columns for this bond")
        ->envname("LTMV_BOND_MATURITY");

    auto* moments = app.add_subcommand("moments", "Closed-form and quadrature horizon moments");
    add_market_options(moments, cfg);
    add_nu_options(moments, cfg);

    auto* validate = app.add_subcommand("validate", "Closed form vs quadrature vs Monte Carlo");
    add_market_options(validate, cfg);
    add_nu_options(validate, cfg);
    validate->add_option("--paths", cfg.paths, "Monte Carlo paths")->envname("LTMV_PATHS");
    validate->add_option("--dt", cfg.dt, "Monte Carlo time step in years")->envname("LTMV_DT");
    validate->add_option("--seed", cfg.seed, "Monte Carlo seed")->envname("LTMV_SEED");
    validate->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")->envname("LTMV_THREADS");
    validate->add_option("--strategy-csv", cfg.strategy_csv, "Allocation CSV to check for an exact round trip");
    validate->add_option("--corrupt-k2", cfg.corrupt_k2)->group("");

    auto* solv = app.add_subcommand("solvents", "Spectral diagnostics of the lambda-matrix");
    add_market_options(solv, cfg);
    solv->add_option("--nu", cfg.nu, "Risk aversion")->envname("LTMV_NU");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e_out;
        const int code = app.exit(e, o, e_out);
        out << o.str();
        err << e_out.str();
        return code == 0 ? kOk : kConfigError;
    }

    try {
        Outcome res;
        if (frontier->parsed()) {
            res = cmd_frontier(cfg, err);
        } else if (allocation->parsed()) {
            res = cmd_allocation(cfg);
        } else if (moments->parsed()) {
            res = cmd_moments(cfg);
        } else if (validate->parsed()) {
            res = cmd_validate(cfg);
        } else {
            res = cmd_solvents(cfg);
        }
        if (res.code == kNumericError) return res.code;
        if (cfg.out.empty()) {
            out << res.text;
        } else {
            std::ofstream f(cfg.out, std::ios::binary);
            if (!f) throw ConfigError("cannot write '" + cfg.out + "'");
            f << res.text;
        }
        if (res.code == kGateFailure) err << "error: validation gate failed\n";
        return res.code;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_input_error(e.kind()) ? kConfigError : kNumericError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kNumericError;
    }
}

}  // namespace ltmv::cli
