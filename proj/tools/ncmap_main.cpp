#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ncmap/bench.hpp"
#include "ncmap/config.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitDivergence = 3;

ncmap::bench::ScenarioConfig load_scenario(const std::string& config_path,
                                           const std::string& preset,
                                           std::optional<std::uint64_t> seed_override) {
    if (config_path.empty() == preset.empty())
        throw ncmap::ConfigError("give exactly one of a config path or --preset");
    ncmap::bench::ScenarioConfig cfg = preset.empty()
                                           ? ncmap::bench::ScenarioConfig::from_file(config_path)
                                           : ncmap::bench::preset_config(preset);
    if (seed_override) cfg.seeds = {*seed_override};
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"derivative-free optimization via switched non-commutative maps"};
    app.require_subcommand(1);

    std::string run_config, run_preset, run_out;
    std::optional<std::uint64_t> run_seed;
    CLI::App* cmd_run = app.add_subcommand("run", "execute a configured experiment");
    cmd_run->add_option("config", run_config, "config file (key = value with sections)");
    cmd_run->add_option("--preset", run_preset, "built-in preset name");
    cmd_run->add_option("--out", run_out, "output directory override");
    cmd_run->add_option("--seed", run_seed, "replace the configured seed list");

    std::string sweep_config, sweep_preset, sweep_out;
    std::optional<std::uint64_t> sweep_seed;
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "per-step-size summary table");
    cmd_sweep->add_option("config", sweep_config, "config file");
    cmd_sweep->add_option("--preset", sweep_preset, "built-in preset name");
    cmd_sweep->add_option("--out", sweep_out, "output directory override");
    cmd_sweep->add_option("--seed", sweep_seed, "replace the configured seed list");

    std::string verify_config, verify_preset, verify_out;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "residual-order and bracket-identity checks");
    cmd_verify->add_option("config", verify_config, "optional [verify] options file");
    cmd_verify->add_option("--preset", verify_preset, "built-in preset name");
    cmd_verify->add_option("--out", verify_out, "directory for the check manifest");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitConfigError;
    }

    try {
        if (cmd_run->parsed()) {
            const auto cfg = load_scenario(run_config, run_preset, run_seed);
            const auto out_dir = ncmap::bench::resolve_out_dir(run_out, cfg);
            const auto report = ncmap::bench::cmd_run(cfg, out_dir);
            std::cout << "wrote " << report.csv_paths.size() << " run file(s) to "
                      << report.out_dir.string() << "\n";
            if (report.any_diverged) std::cerr << "warning: diverged run(s), see manifest\n";
            return report.exit_code();
        }
        if (cmd_sweep->parsed()) {
            const auto cfg = load_scenario(sweep_config, sweep_preset, sweep_seed);
            const auto out_dir = ncmap::bench::resolve_out_dir(sweep_out, cfg);
            const auto report = ncmap::bench::cmd_sweep(cfg, out_dir);
            std::cout << "wrote sweep table to " << report.out_dir.string() << "\n";
            if (report.any_diverged) std::cerr << "warning: diverged run(s), see manifest\n";
            return report.exit_code();
        }
        // verify
        ncmap::bench::VerifyOptions opts;
        if (!verify_preset.empty())
            opts = ncmap::bench::VerifyOptions::from_config(ncmap::ConfigFile::parse(
                ncmap::bench::preset_text(verify_preset), verify_preset));
        else if (!verify_config.empty())
            opts = ncmap::bench::VerifyOptions::from_config(
                ncmap::ConfigFile::load(verify_config));
        std::filesystem::path out_dir = verify_out;
        if (const char* env = std::getenv("NCMAP_OUT"); env && *env) out_dir = env;
        const auto report = ncmap::bench::cmd_verify(std::cout, out_dir, opts);
        return report.exit_code();
    } catch (const ncmap::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitCheckFailure;
}
