#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cdatc/config.hpp"

namespace cdatc {

// Fully resolved scenario document: every key either given or defaulted.
// Edges and noise variances are stored in 1-based display order.
struct ScenarioSpec {
    // [network]
    int nodes = 7;
    std::vector<std::pair<int, int>> edges; // 1-based labels

    // [signal]
    int taps = 50;
    double signal_power = 1.0;
    std::vector<double> noise_variances;

    // [diffusion]
    double mu = 0.1;
    double delta = 1e-5;
    CombinerRule combiner = CombinerRule::adaptive_ls;

    // [energy]
    double battery = 500.0;
    double sense_cost = 1.0;
    double tx_cost = 2.0;
    double harvest_prob = 0.4;
    double harvest_lo = 2.0;
    double harvest_hi = 4.0;
    double initial_battery = 500.0;

    // [censoring]
    bool censoring = true;
    double alpha_x = 0.1;
    double eta = 0.01;
    double tau_init = 0.0;
    double rho_smoothing = 0.05;
    double rho_lo = 0.01;
    double rho_hi = 0.99;

    // [sim]
    std::vector<Scheme> schemes{Scheme::cd_atc};
    long steps = 10000;
    long runs = 50;
    std::uint64_t seed = 1;

    bool operator==(const ScenarioSpec&) const = default;
};

// Parse and validate. Unknown sections/keys fail fast; missing keys take
// the documented defaults. source_name is used in error messages.
ScenarioSpec parse_scenario_text(std::string_view text,
                                 std::string_view source_name = "<string>");
ScenarioSpec parse_scenario(const std::filesystem::path& path);

// Canonical scenario rendering; parse(render(spec)) == spec.
std::string render_scenario(const ScenarioSpec& spec);

// Build the per-scheme simulation config (validates as a whole).
SimConfig build_config(const ScenarioSpec& spec, Scheme scheme);

const char* combiner_token(CombinerRule rule);

} // namespace cdatc
