#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdatc/censoring.hpp"
#include "cdatc/diffusion.hpp"
#include "cdatc/energy.hpp"
#include "cdatc/topology.hpp"

namespace cdatc {

enum class Scheme {
    cd_atc,        // censoring D-ATC
    nsd_atc,       // non-selective D-ATC (every estimate transmitted)
    unconstrained, // D-ATC with unlimited energy and no censoring
};

const char* scheme_label(Scheme s);       // display label, e.g. "CD-ATC"
const char* scheme_token(Scheme s);       // scenario token, e.g. "cd-atc"
std::optional<Scheme> scheme_from_token(const std::string& token);

struct SignalConfig {
    int taps = 50;
    double signal_power = 1.0;
    std::vector<double> noise_variances; // one per node
    // Optional abrupt change of the ground truth at this step (off when <0).
    long jump_step = -1;
    // Redraw w_o per Monte-Carlo run (default) or hold one draw fixed.
    bool redraw_per_run = true;
};

struct DiffusionConfig {
    double mu = 0.1;
    double delta = 1e-5;
    CombinerRule combiner = CombinerRule::adaptive_ls;
};

struct SimConfig {
    Topology topology = Topology::default_seven_node();
    SignalConfig signal;
    DiffusionConfig diffusion;
    EnergyParams energy;
    CensorParams censoring;
    Scheme scheme = Scheme::cd_atc;
    long n_steps = 10000;
    long runs = 50;
    std::uint64_t seed = 1;

    bool energy_enabled() const { return scheme != Scheme::unconstrained; }
    bool censoring_enabled() const {
        return scheme == Scheme::cd_atc && censoring.enabled;
    }
};

// Throws ConfigInvalid on the first violated constraint.
void validate_config(const SimConfig& config);

} // namespace cdatc
