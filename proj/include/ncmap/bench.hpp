#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncmap/config.hpp"
#include "ncmap/objective.hpp"
#include "ncmap/optimizer.hpp"
#include "ncmap/stepper.hpp"
#include "ncmap/vec.hpp"

namespace ncmap::bench {

/// One experiment description: problem, algorithm grid (methods x h x
/// seeds), baselines, and output policy. Parsed from a key = value config
/// with sections; every field is echoed into the output manifest.
struct ScenarioConfig {
    // [problem]
    std::string problem = "quadratic";  // quadratic | double_well
    std::size_t dimension = 1;
    Vec center{2.0};
    double offset = 6.0;

    // [algorithm]
    std::string pair = "sincos";
    std::vector<StepMethod> methods{StepMethod::euler};
    std::vector<double> h_values{0.5};
    Vec x0{0.5};
    std::uint64_t max_steps = 400;
    double stop_tau = 0.0;

    // [noise]
    double sigma = 0.0;
    std::vector<std::uint64_t> seeds{1};

    // [baselines]
    bool with_exact_gd = false;
    bool with_fd_gd = false;

    // [output]
    std::string out_dir = "ncmap_out";
    std::size_t band_window = 100;

    std::string name = "scenario";

    static ScenarioConfig from_config(const ConfigFile& file);
    static ScenarioConfig from_file(const std::filesystem::path& path);

    Objective make_objective() const;
    std::optional<Vec> x_star() const;
    nlohmann::json echo() const;
};

struct RunReport {
    nlohmann::json manifest;
    std::vector<std::string> csv_paths;
    std::filesystem::path out_dir;
    bool checks_passed = true;
    bool any_diverged = false;

    int exit_code() const {
        if (any_diverged) return 3;
        return checks_passed ? 0 : 1;
    }
};

// --- presets -------------------------------------------------------------

std::vector<std::string> preset_names();
bool is_preset(const std::string& name);
std::string preset_text(const std::string& name);      // throws ConfigError
ScenarioConfig preset_config(const std::string& name); // throws ConfigError

/// Output directory precedence: NCMAP_OUT env var, then the CLI --out
/// value, then the config's [output] dir.
std::filesystem::path resolve_out_dir(const std::string& cli_out,
                                      const ScenarioConfig& cfg);

// --- commands ------------------------------------------------------------

/// Execute every (method, h, seed) combination plus requested baselines;
/// one CSV per run, one manifest per invocation.
RunReport cmd_run(const ScenarioConfig& cfg, const std::filesystem::path& out_dir);

/// Per-h summary table: (method, h, limit band, iterations-to-band, eval
/// count). Requires at least two h values.
RunReport cmd_sweep(const ScenarioConfig& cfg, const std::filesystem::path& out_dir);

struct VerifyOptions {
    int h_exp_lo = 2;               // grid h = 2^-e, e = lo..hi
    int h_exp_hi = 9;
    std::size_t points_per_case = 10;
    std::uint64_t sample_seed = 20260811u;

    static VerifyOptions from_config(const ConfigFile& file);
};

struct VerifyRow {
    std::string check;
    std::string detail;
    double metric_a = 0.0;  // order/control: worst slope; bracket: worst rel. error
    double metric_b = 0.0;  // order/control: worst R^2
    bool passed = false;
    std::string note;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    bool all_passed = true;
    double seconds = 0.0;
};

/// Residual-order fits for both pairs and both methods on quadratics in
/// n = 1..3, bracket-identity spot checks on three objectives, a
/// deliberately mismatched drift control, the exact-cancellation edge
/// case, and empirical pair-flag agreement.
VerifyReport verify_suite(const VerifyOptions& opts = {});

/// Run the suite, print one row per check to `out`, optionally write a
/// manifest; exit code 1 when any check fails.
RunReport cmd_verify(std::ostream& out, const std::filesystem::path& out_dir,
                     const VerifyOptions& opts = {});

// --- csv -----------------------------------------------------------------

/// Fixed 17-significant-digit scientific formatting ("%.16e"), the
/// round-trip-exact width used for all CSV numbers.
std::string format_sig17(double v);

/// Columns: k, x components, y components, J at the iterate, phase label,
/// active coordinate, cumulative counted evaluations. Written atomically
/// (temp file + rename), "\n" newlines.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);

/// Spread of the last `count` iterates around their mean:
/// sqrt(mean |x_k - mean|^2). NaN when fewer points exist.
double tail_std(const Trajectory& traj, std::size_t count);

} // namespace ncmap::bench
