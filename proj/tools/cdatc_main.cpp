#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "cdatc/errors.hpp"
#include "cdatc/monte_carlo.hpp"
#include "cdatc/presets.hpp"
#include "cdatc/results_io.hpp"
#include "cdatc/scenario.hpp"

namespace {

struct CommonOptions {
    std::optional<std::uint64_t> seed;
    std::optional<long> runs;
    std::string out_dir;
    int threads = 0;
    bool serial = false;
};

void apply_overrides(cdatc::ScenarioSpec& spec, const CommonOptions& opt) {
    if (opt.seed) spec.seed = *opt.seed;
    if (opt.runs) spec.runs = *opt.runs;
}

int run_spec(const cdatc::ScenarioSpec& spec, const CommonOptions& opt,
             const std::string& default_out) {
#ifdef _OPENMP
    if (opt.threads > 0) omp_set_num_threads(opt.threads);
#endif
    const auto exec =
        opt.serial ? cdatc::Execution::serial : cdatc::Execution::parallel;
    std::vector<cdatc::MonteCarloResult> results;
    for (cdatc::Scheme scheme : spec.schemes) {
        const auto config = cdatc::build_config(spec, scheme);
        std::cerr << "running " << cdatc::scheme_label(scheme) << " ("
                  << config.runs << " runs x " << config.n_steps
                  << " steps)...\n";
        results.push_back(cdatc::monte_carlo(config, exec));
        std::cerr << "  steady-state NMSD "
                  << results.back().steady_state_nmsd_db() << " dB\n";
    }
    const std::filesystem::path out =
        opt.out_dir.empty() ? std::filesystem::path("results") / default_out
                            : std::filesystem::path(opt.out_dir);
    cdatc::emit_results(spec, results, out);
    std::cout << "results written to " << out.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Censoring diffusion simulator for energy-harvesting "
                 "sensor networks"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string scenario_path;
    std::string preset_name;

    auto add_common = [&](CLI::App* cmd, bool with_runs) {
        cmd->add_option("--seed", opt.seed, "Master seed override");
        if (with_runs) {
            cmd->add_option("--runs", opt.runs, "Monte-Carlo run count override");
        }
        cmd->add_option("--out", opt.out_dir, "Output directory");
        cmd->add_option("--threads", opt.threads,
                        "OpenMP thread count (0 = library default)");
        cmd->add_flag("--serial", opt.serial,
                      "Use the serial reference execution path");
    };

    auto* simulate =
        app.add_subcommand("simulate", "Run a scenario file end to end");
    simulate->add_option("scenario", scenario_path, "Scenario file")
        ->required();
    add_common(simulate, true);

    auto* preset = app.add_subcommand("preset", "Run a built-in experiment");
    preset->add_option("name", preset_name, "One of: fig2a, fig2b, fig3a, fig3b, unconstrained")
        ->required();
    add_common(preset, true);

    auto* validate = app.add_subcommand(
        "validate", "Parse a scenario file and print the effective config");
    validate->add_option("scenario", scenario_path, "Scenario file")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) {
            auto spec = cdatc::parse_scenario(scenario_path);
            apply_overrides(spec, opt);
            return run_spec(spec, opt,
                            std::filesystem::path(scenario_path).stem().string());
        }
        if (preset->parsed()) {
            auto spec = cdatc::preset_scenario(preset_name);
            apply_overrides(spec, opt);
            return run_spec(spec, opt, preset_name);
        }
        if (validate->parsed()) {
            const auto spec = cdatc::parse_scenario(scenario_path);
            std::cout << cdatc::render_scenario(spec);
            return 0;
        }
    } catch (const cdatc::SimError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
