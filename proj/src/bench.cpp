#include "ncmap/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "ncmap/oracle.hpp"
#include "ncmap/rng.hpp"

namespace ncmap::bench {

namespace {

Vec expand_to_dimension(const ConfigFile& file, const std::string& section,
                        const std::string& key, Vec v, std::size_t dimension) {
    if (v.size() == 1 && dimension > 1) return Vec(dimension, v[0]);
    if (v.size() != dimension)
        file.fail(section, key,
                  "expected 1 or " + std::to_string(dimension) + " values, got " +
                      std::to_string(v.size()));
    return v;
}

std::string format_h(double h) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", h);
    return buf;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path().empty()
                                            ? std::filesystem::path(".")
                                            : path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

nlohmann::json run_summary(const Trajectory& traj, const std::optional<Vec>& x_star,
                           std::size_t band_window) {
    nlohmann::json row;
    row["status"] = std::string(to_string(traj.status));
    row["steps"] = traj.steps_taken;
    row["evals"] = traj.evals.empty() ? 0 : traj.evals.back();
    row["tail_std"] = tail_std(traj, 200);
    if (x_star && traj.size() > band_window) {
        row["band"] = limit_band(traj, band_window, *x_star);
        row["final_filtered_error"] = distance(traj.y.back(), *x_star);
    } else {
        row["band"] = nullptr;
        row["final_filtered_error"] = nullptr;
    }
    return row;
}

} // namespace

// --- ScenarioConfig --------------------------------------------------------

ScenarioConfig ScenarioConfig::from_config(const ConfigFile& file) {
    ScenarioConfig cfg;
    cfg.name = file.name();
    if (const auto dot = cfg.name.rfind(".cfg"); dot != std::string::npos)
        cfg.name = cfg.name.substr(0, dot);

    bool recognized = false;
    for (const char* section : {"problem", "algorithm", "noise", "baselines", "output"})
        recognized = recognized || file.sections().contains(section);
    if (!recognized)
        throw ConfigError(file.name() +
                          ": no experiment sections found ([problem], [algorithm], ...)");

    cfg.problem = file.get_string("problem", "id", cfg.problem);
    if (cfg.problem != "quadratic" && cfg.problem != "double_well")
        file.fail("problem", "id", "unknown problem '" + cfg.problem + "'");
    cfg.dimension = static_cast<std::size_t>(
        file.get_u64("problem", "dimension", cfg.dimension));
    if (cfg.dimension == 0) file.fail("problem", "dimension", "must be >= 1");
    cfg.center = expand_to_dimension(
        file, "problem", "center", file.get_vector("problem", "center", cfg.center),
        cfg.dimension);
    cfg.offset = file.get_double("problem", "offset", cfg.offset);

    cfg.pair = file.get_string("algorithm", "pair", cfg.pair);
    try {
        pair_by_name(cfg.pair);
    } catch (const std::invalid_argument& e) {
        file.fail("algorithm", "pair", e.what());
    }

    const std::string method_key =
        file.has("algorithm", "methods") ? "methods" : "method";
    cfg.methods.clear();
    for (const std::string& m :
         file.get_list("algorithm", method_key, {"euler"})) {
        try {
            cfg.methods.push_back(parse_step_method(m));
        } catch (const std::invalid_argument& e) {
            file.fail("algorithm", method_key, e.what());
        }
    }

    cfg.h_values = file.get_vector("algorithm", "h", cfg.h_values);
    for (double h : cfg.h_values)
        if (!(h > 0.0)) file.fail("algorithm", "h", "step sizes must be positive");

    cfg.x0 = expand_to_dimension(file, "algorithm", "x0",
                                 file.get_vector("algorithm", "x0", cfg.x0),
                                 cfg.dimension);
    cfg.max_steps = file.get_u64("algorithm", "max_steps", cfg.max_steps);
    if (cfg.max_steps == 0) file.fail("algorithm", "max_steps", "must be >= 1");
    cfg.stop_tau = file.get_double("algorithm", "stop_tau", cfg.stop_tau);
    if (cfg.stop_tau < 0.0) file.fail("algorithm", "stop_tau", "must be >= 0");

    cfg.sigma = file.get_double("noise", "sigma", cfg.sigma);
    if (cfg.sigma < 0.0) file.fail("noise", "sigma", "must be >= 0");
    cfg.seeds = file.get_u64_list("noise", "seeds", cfg.seeds);

    cfg.with_exact_gd = file.get_bool("baselines", "exact_gd", cfg.with_exact_gd);
    cfg.with_fd_gd = file.get_bool("baselines", "fd_gd", cfg.with_fd_gd);

    cfg.out_dir = file.get_string("output", "dir", cfg.out_dir);
    cfg.band_window = static_cast<std::size_t>(
        file.get_u64("output", "band_window", cfg.band_window));
    if (cfg.band_window == 0) file.fail("output", "band_window", "must be >= 1");

    return cfg;
}

ScenarioConfig ScenarioConfig::from_file(const std::filesystem::path& path) {
    return from_config(ConfigFile::load(path));
}

Objective ScenarioConfig::make_objective() const {
    if (problem == "double_well") return make_double_well(dimension);
    return make_quadratic(center, offset);
}

std::optional<Vec> ScenarioConfig::x_star() const {
    if (problem == "quadratic") return center;
    return std::nullopt;
}

nlohmann::json ScenarioConfig::echo() const {
    nlohmann::json j;
    j["name"] = name;
    j["problem"]["id"] = problem;
    j["problem"]["dimension"] = dimension;
    j["problem"]["center"] = center;
    j["problem"]["offset"] = offset;
    j["algorithm"]["pair"] = pair;
    std::vector<std::string> method_names;
    for (StepMethod m : methods) method_names.emplace_back(to_string(m));
    j["algorithm"]["methods"] = method_names;
    j["algorithm"]["h"] = h_values;
    j["algorithm"]["x0"] = x0;
    j["algorithm"]["max_steps"] = max_steps;
    j["algorithm"]["stop_tau"] = stop_tau;
    j["noise"]["sigma"] = sigma;
    j["noise"]["seeds"] = seeds;
    j["baselines"]["exact_gd"] = with_exact_gd;
    j["baselines"]["fd_gd"] = with_fd_gd;
    j["output"]["dir"] = out_dir;
    j["output"]["band_window"] = band_window;
    return j;
}

// --- csv -------------------------------------------------------------------

std::string format_sig17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj) {
    const std::size_t n = traj.x.empty() ? 0 : traj.x[0].size();
    std::string text;
    text.reserve(traj.size() * (n * 2 + 4) * 26 + 64);
    text += "k";
    for (std::size_t i = 0; i < n; ++i) text += ",x" + std::to_string(i);
    for (std::size_t i = 0; i < n; ++i) text += ",y" + std::to_string(i);
    text += ",J,phase,coord,evals\n";
    for (std::size_t k = 0; k < traj.size(); ++k) {
        text += std::to_string(k);
        for (std::size_t i = 0; i < n; ++i) text += "," + format_sig17(traj.x[k][i]);
        for (std::size_t i = 0; i < n; ++i) text += "," + format_sig17(traj.y[k][i]);
        text += "," + format_sig17(traj.cost[k]);
        text += ",";
        text += traj.phase[k] < 0 ? "-" : phase_label(traj.phase[k]);
        text += "," + std::to_string(traj.coordinate[k]);
        text += "," + std::to_string(traj.evals[k]);
        text += "\n";
    }
    write_text_atomic(path, text);
}

double tail_std(const Trajectory& traj, std::size_t count) {
    const std::size_t m = std::min(count, traj.size());
    if (m == 0) return std::numeric_limits<double>::quiet_NaN();
    const std::size_t n = traj.x[0].size();
    Vec mean(n, 0.0);
    for (std::size_t k = traj.size() - m; k < traj.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) mean[i] += traj.x[k][i];
    for (double& mi : mean) mi /= static_cast<double>(m);
    double acc = 0.0;
    for (std::size_t k = traj.size() - m; k < traj.size(); ++k) {
        const double d = distance(traj.x[k], mean);
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(m));
}

// --- output dir --------------------------------------------------------------

std::filesystem::path resolve_out_dir(const std::string& cli_out,
                                      const ScenarioConfig& cfg) {
    if (const char* env = std::getenv("NCMAP_OUT"); env && *env) return env;
    if (!cli_out.empty()) return cli_out;
    return cfg.out_dir;
}

// --- cmd_run -----------------------------------------------------------------

RunReport cmd_run(const ScenarioConfig& cfg, const std::filesystem::path& out_dir) {
    RunReport report;
    report.out_dir = out_dir;
    std::filesystem::create_directories(out_dir);

    nlohmann::json runs = nlohmann::json::array();
    const std::optional<Vec> x_star = cfg.x_star();

    auto emit = [&](const std::string& label, double h,
                    std::optional<std::uint64_t> seed, const Trajectory& traj) {
        std::string file_name = cfg.name + "_" + label + "_h" + format_h(h);
        if (seed) file_name += "_seed" + std::to_string(*seed);
        file_name += ".csv";
        write_trajectory_csv(out_dir / file_name, traj);
        report.csv_paths.push_back(file_name);
        nlohmann::json row = run_summary(traj, x_star, cfg.band_window);
        row["method"] = label;
        if (label == "fd-gd")
            row["label"] = "forward-difference descent";
        else if (label == "exact-gd")
            row["label"] = "exact-gradient descent";
        else
            row["label"] = "switched-map " + label;
        row["h"] = h;
        if (seed)
            row["seed"] = *seed;
        else
            row["seed"] = nullptr;
        row["csv"] = file_name;
        runs.push_back(row);
        report.any_diverged |= traj.status == RunStatus::diverged;
    };

    for (const StepMethod method : cfg.methods) {
        for (const double h : cfg.h_values) {
            for (const std::uint64_t seed : cfg.seeds) {
                OptimizerConfig ocfg;
                ocfg.method = method;
                ocfg.pair = cfg.pair;
                ocfg.h = h;
                ocfg.x0 = cfg.x0;
                ocfg.max_steps = cfg.max_steps;
                ocfg.stop_tau = cfg.stop_tau;
                Trajectory traj;
                if (cfg.sigma > 0.0) {
                    const NoisyObjective obj(cfg.make_objective(), cfg.sigma, seed);
                    traj = run(obj, ocfg);
                } else {
                    const Objective obj = cfg.make_objective();
                    traj = run(obj, ocfg);
                }
                emit(std::string(to_string(method)), h, seed, traj);
            }
        }
    }

    for (const double h : cfg.h_values) {
        if (cfg.with_exact_gd) {
            const Objective obj = cfg.make_objective();
            emit("exact-gd", h, std::nullopt,
                 oracle::baseline_exact_gd(obj, cfg.x0, h, cfg.max_steps));
        }
        if (cfg.with_fd_gd) {
            for (const std::uint64_t seed : cfg.seeds) {
                Trajectory traj;
                if (cfg.sigma > 0.0) {
                    const NoisyObjective obj(cfg.make_objective(), cfg.sigma, seed);
                    traj = oracle::baseline_fd_gd(obj, cfg.x0, h, cfg.max_steps);
                } else {
                    const Objective obj = cfg.make_objective();
                    traj = oracle::baseline_fd_gd(obj, cfg.x0, h, cfg.max_steps);
                }
                emit("fd-gd", h, seed, traj);
            }
        }
    }

    report.manifest["tool"] = "ncmap";
    report.manifest["command"] = "run";
    report.manifest["rng"] = kRngAlgorithm;
    report.manifest["config"] = cfg.echo();
    report.manifest["runs"] = runs;
    report.manifest["summary"] = {
        {"runs", runs.size()},
        {"any_diverged", report.any_diverged},
    };
    write_text_atomic(out_dir / "manifest.json", report.manifest.dump(2) + "\n");
    return report;
}

// --- cmd_sweep ----------------------------------------------------------------

namespace {

std::size_t steps_to_band(const Trajectory& traj, const Vec& x_star, double band) {
    std::size_t first_inside = 0;
    for (std::size_t k = traj.size(); k-- > 0;) {
        if (distance(traj.x[k], x_star) > band) {
            first_inside = k + 1;
            break;
        }
    }
    return first_inside;
}

} // namespace

RunReport cmd_sweep(const ScenarioConfig& cfg, const std::filesystem::path& out_dir) {
    if (cfg.h_values.size() < 2)
        throw ConfigError(cfg.name + ": sweep requires at least 2 step sizes, got " +
                          std::to_string(cfg.h_values.size()));

    RunReport report;
    report.out_dir = out_dir;
    std::filesystem::create_directories(out_dir);

    nlohmann::json runs = nlohmann::json::array();
    const std::optional<Vec> x_star = cfg.x_star();
    std::string table = "method,h,band,steps_to_band,evals\n";

    for (const StepMethod method : cfg.methods) {
        for (const double h : cfg.h_values) {
            OptimizerConfig ocfg;
            ocfg.method = method;
            ocfg.pair = cfg.pair;
            ocfg.h = h;
            ocfg.x0 = cfg.x0;
            ocfg.max_steps = cfg.max_steps;
            ocfg.stop_tau = cfg.stop_tau;
            Trajectory traj;
            if (cfg.sigma > 0.0) {
                const NoisyObjective obj(cfg.make_objective(), cfg.sigma, cfg.seeds[0]);
                traj = run(obj, ocfg);
            } else {
                const Objective obj = cfg.make_objective();
                traj = run(obj, ocfg);
            }
            report.any_diverged |= traj.status == RunStatus::diverged;

            double band = std::numeric_limits<double>::quiet_NaN();
            std::size_t to_band = 0;
            if (x_star && traj.status != RunStatus::diverged &&
                traj.size() > cfg.band_window) {
                band = limit_band(traj, cfg.band_window, *x_star);
                to_band = steps_to_band(traj, *x_star, band);
            }
            const std::uint64_t evals = traj.evals.empty() ? 0 : traj.evals.back();
            table += std::string(to_string(method)) + "," + format_sig17(h) + "," +
                     format_sig17(band) + "," + std::to_string(to_band) + "," +
                     std::to_string(evals) + "\n";

            nlohmann::json row = run_summary(traj, x_star, cfg.band_window);
            row["method"] = std::string(to_string(method));
            row["h"] = h;
            row["steps_to_band"] = to_band;
            runs.push_back(row);
        }
    }

    write_text_atomic(out_dir / "sweep.csv", table);
    report.csv_paths.push_back("sweep.csv");

    report.manifest["tool"] = "ncmap";
    report.manifest["command"] = "sweep";
    report.manifest["rng"] = kRngAlgorithm;
    report.manifest["config"] = cfg.echo();
    report.manifest["runs"] = runs;
    report.manifest["summary"] = {
        {"runs", runs.size()},
        {"any_diverged", report.any_diverged},
    };
    write_text_atomic(out_dir / "manifest.json", report.manifest.dump(2) + "\n");
    return report;
}

// --- verify -------------------------------------------------------------------

VerifyOptions VerifyOptions::from_config(const ConfigFile& file) {
    VerifyOptions opts;
    opts.h_exp_lo = static_cast<int>(file.get_u64("verify", "h_exp_lo", 2));
    opts.h_exp_hi = static_cast<int>(file.get_u64("verify", "h_exp_hi", 9));
    opts.points_per_case =
        static_cast<std::size_t>(file.get_u64("verify", "points_per_case", 10));
    opts.sample_seed = file.get_u64("verify", "sample_seed", 20260811u);
    if (opts.h_exp_lo >= opts.h_exp_hi)
        file.fail("verify", "h_exp_lo", "h_exp_lo must be smaller than h_exp_hi");
    if (opts.points_per_case == 0)
        file.fail("verify", "points_per_case", "must be >= 1");
    return opts;
}

VerifyReport verify_suite(const VerifyOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport report;

    Vec h_grid;
    for (int e = opts.h_exp_lo; e <= opts.h_exp_hi; ++e)
        h_grid.push_back(std::pow(2.0, -e));

    constexpr double kMinSlope = 1.4;
    constexpr double kMinR2 = 0.98;
    constexpr double kBracketTol = 1e-4;

    // Quadratics scaled so the whole pinned h grid sits in the asymptotic
    // regime of the sweep expansion (field Lipschitz constant times
    // sqrt(h_max) well below 1).
    const Vec suite_centers[3] = {{0.4}, {0.4, -0.3}, {0.4, -0.3, 0.2}};
    constexpr double kSuiteOffset = 0.05;
    constexpr double kSuiteCurvature = 0.1;

    UniformStream sampler(opts.sample_seed);
    for (std::size_t ni = 0; ni < 3; ++ni) {
        const std::size_t n = ni + 1;
        const Objective obj =
            make_quadratic(suite_centers[ni], kSuiteOffset, kSuiteCurvature);
        for (const GeneratingPair& pair : {pair_simple(), pair_sincos()}) {
            for (const StepMethod method : {StepMethod::euler, StepMethod::heun}) {
                VerifyRow row;
                row.check = "order";
                row.detail = "pair=" + pair.label + " method=" +
                             std::string(to_string(method)) + " n=" + std::to_string(n);
                row.metric_a = std::numeric_limits<double>::infinity();
                row.metric_b = std::numeric_limits<double>::infinity();
                row.passed = true;
                for (std::size_t p = 0; p < opts.points_per_case; ++p) {
                    Vec x(n);
                    for (std::size_t i = 0; i < n; ++i) {
                        const double sign = sampler.sign();  // sequenced draws
                        x[i] = suite_centers[ni][i] + sign * sampler.next(0.3, 1.0);
                    }
                    const oracle::ResidualFit fit =
                        oracle::residual_order(pair, method, obj, x, h_grid);
                    row.metric_a = std::min(row.metric_a, fit.slope);
                    row.metric_b = std::min(row.metric_b, fit.r_squared);
                    row.passed = row.passed && fit.conclusive(kMinSlope, kMinR2);
                }
                row.note = "min slope / min R2 over " +
                           std::to_string(opts.points_per_case) + " points";
                report.rows.push_back(std::move(row));
            }
        }
    }

    // Commutator identity spot checks: [f1,f2] of the sincos pair must
    // reproduce -grad J pointwise on unrelated objectives.
    {
        struct BracketCase {
            Objective obj;
            double lo, hi;
        };
        BracketCase cases[] = {
            {make_quadratic({2.0}, 6.0), -1.0, 4.0},
            {make_quadratic({2.0, 2.0}, 6.0), -1.0, 4.0},
            {make_double_well(1), -2.0, 2.0},
        };
        const GeneratingPair pair = pair_sincos();
        for (const auto& c : cases) {
            VerifyRow row;
            row.check = "bracket";
            row.detail = c.obj.label() + " n=" + std::to_string(c.obj.dimension());
            double worst = 0.0;
            for (int p = 0; p < 100; ++p) {
                Vec x(c.obj.dimension());
                for (double& xi : x) xi = sampler.next(c.lo, c.hi);
                const Vec br = oracle::bracket(pair, c.obj, x);
                const Vec g = oracle::fd_gradient(c.obj, x);
                double err = 0.0, gn = 0.0;
                for (std::size_t i = 0; i < x.size(); ++i) {
                    err += (br[i] + g[i]) * (br[i] + g[i]);
                    gn += g[i] * g[i];
                }
                worst = std::max(worst,
                                 std::sqrt(err) / (1.0 + std::sqrt(gn)));
            }
            row.metric_a = worst;
            row.passed = worst <= kBracketTol;
            row.note = "max |[f1,f2] + grad J| / (1 + |grad J|), 100 points";
            report.rows.push_back(std::move(row));
        }
    }

    // Negative control: Euler with the simple pair measured against a
    // deliberately wrong drift of -grad J. The h^1 mismatch term must
    // dominate, driving the fitted slope to ~1 instead of >= 1.4.
    {
        const Objective obj = make_quadratic({0.0}, 0.1, 0.1);
        const Vec x{3.0};
        const oracle::ResidualFit fit = oracle::residual_order(
            pair_simple(), StepMethod::euler, obj, x, h_grid,
            oracle::MacroDrift::neg_gradient);
        VerifyRow row;
        row.check = "control";
        row.detail = "pair=simple method=euler vs -grad J";
        row.metric_a = fit.slope;
        row.metric_b = fit.r_squared;
        row.passed = fit.slope >= 0.75 && fit.slope <= 1.25 &&
                     fit.r_squared >= kMinR2 && !fit.conclusive(kMinSlope, kMinR2);
        row.note = "mismatched drift must be detected (slope ~ 1)";
        report.rows.push_back(std::move(row));
    }

    // Constant objective: all four signed legs cancel, so every residual
    // sits at rounding level and is flagged instead of fitted.
    {
        const Objective obj = make_constant(1, 4.2);
        const Vec x{0.7};
        VerifyRow row;
        row.check = "cancellation";
        row.detail = "constant objective, both pairs and methods";
        row.passed = true;
        for (const GeneratingPair& pair : {pair_simple(), pair_sincos()})
            for (const StepMethod method : {StepMethod::euler, StepMethod::heun}) {
                const oracle::ResidualFit fit =
                    oracle::residual_order(pair, method, obj, x, h_grid);
                row.passed = row.passed && fit.all_cancelled();
            }
        row.note = "all residuals below exact-cancellation floor";
        report.rows.push_back(std::move(row));
    }

    // Declared validity flags must agree with the empirical classifier.
    for (const GeneratingPair& pair : {pair_simple(), pair_sincos()}) {
        const auto [euler_ok, heun_ok] = oracle::classify_pair(pair);
        VerifyRow row;
        row.check = "flags";
        row.detail = "pair=" + pair.label;
        row.metric_a = euler_ok ? 1.0 : 0.0;
        row.metric_b = heun_ok ? 1.0 : 0.0;
        row.passed = euler_ok == pair.valid_for_euler && heun_ok == pair.valid_for_heun;
        row.note = "declared euler/heun validity matches measurement";
        report.rows.push_back(std::move(row));
    }

    for (const VerifyRow& row : report.rows) report.all_passed &= row.passed;
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

RunReport cmd_verify(std::ostream& out, const std::filesystem::path& out_dir,
                     const VerifyOptions& opts) {
    const VerifyReport report = verify_suite(opts);

    out << "check         detail                                      slope/err   R2        status\n";
    out << "---------------------------------------------------------------------------------------\n";
    for (const VerifyRow& row : report.rows) {
        std::ostringstream line;
        line << std::left << std::setw(14) << row.check << std::setw(44) << row.detail;
        line << std::setw(12) << std::setprecision(4) << row.metric_a;
        line << std::setw(10) << std::setprecision(4) << row.metric_b;
        line << (row.passed ? "pass" : "FAIL");
        out << line.str() << "\n";
    }
    out << "---------------------------------------------------------------------------------------\n";
    out << (report.all_passed ? "all checks passed" : "CHECK FAILURES") << " ("
        << std::setprecision(3) << report.seconds << " s)\n";

    RunReport run_report;
    run_report.checks_passed = report.all_passed;
    run_report.manifest["tool"] = "ncmap";
    run_report.manifest["command"] = "verify";
    run_report.manifest["rng"] = kRngAlgorithm;
    run_report.manifest["options"] = {
        {"h_exp_lo", opts.h_exp_lo},
        {"h_exp_hi", opts.h_exp_hi},
        {"points_per_case", opts.points_per_case},
        {"sample_seed", opts.sample_seed},
    };
    nlohmann::json rows = nlohmann::json::array();
    for (const VerifyRow& row : report.rows)
        rows.push_back({{"check", row.check},
                        {"detail", row.detail},
                        {"metric_a", row.metric_a},
                        {"metric_b", row.metric_b},
                        {"passed", row.passed},
                        {"note", row.note}});
    run_report.manifest["checks"] = rows;
    run_report.manifest["all_passed"] = report.all_passed;
    run_report.manifest["seconds"] = report.seconds;

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_text_atomic(out_dir / "verify_manifest.json",
                          run_report.manifest.dump(2) + "\n");
        run_report.out_dir = out_dir;
    }
    return run_report;
}

} // namespace ncmap::bench
