#include "cdatc/config.hpp"

#include <string>

#include "cdatc/errors.hpp"

namespace cdatc {

const char* scheme_label(Scheme s) {
    switch (s) {
    case Scheme::cd_atc: return "CD-ATC";
    case Scheme::nsd_atc: return "NSD-ATC";
    case Scheme::unconstrained: return "D-ATC-unconstrained";
    }
    return "?";
}

const char* scheme_token(Scheme s) {
    switch (s) {
    case Scheme::cd_atc: return "cd-atc";
    case Scheme::nsd_atc: return "nsd-atc";
    case Scheme::unconstrained: return "unconstrained";
    }
    return "?";
}

std::optional<Scheme> scheme_from_token(const std::string& token) {
    if (token == "cd-atc") return Scheme::cd_atc;
    if (token == "nsd-atc") return Scheme::nsd_atc;
    if (token == "unconstrained" || token == "d-atc-unconstrained") {
        return Scheme::unconstrained;
    }
    return std::nullopt;
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) fail(ErrorCode::config_invalid, message);
}

} // namespace

void validate_config(const SimConfig& config) {
    const int n = config.topology.n_nodes();
    require(config.n_steps >= 1, "n_steps must be >= 1");
    require(config.runs >= 1, "runs must be >= 1");

    require(config.signal.taps >= 1, "taps must be >= 1");
    require(config.signal.signal_power > 0.0, "signal_power must be > 0");
    require(static_cast<int>(config.signal.noise_variances.size()) == n,
            "noise_variances must have one entry per node (" +
                std::to_string(n) + "), got " +
                std::to_string(config.signal.noise_variances.size()));
    for (double v : config.signal.noise_variances) {
        require(v >= 0.0, "noise variances must be >= 0");
    }

    require(config.diffusion.mu > 0.0, "mu must be > 0");
    require(config.diffusion.delta > 0.0, "delta must be > 0");

    const auto& e = config.energy;
    require(e.capacity > 0.0, "battery must be > 0");
    require(e.sense_cost >= 0.0, "sense_cost must be >= 0");
    require(e.tx_cost >= 0.0, "tx_cost must be >= 0");
    require(e.harvest_prob >= 0.0 && e.harvest_prob <= 1.0,
            "harvest_prob must lie in [0,1]");
    require(e.harvest_min >= 0.0 && e.harvest_min <= e.harvest_max,
            "harvest_range must satisfy 0 <= lo <= hi");
    require(e.initial_level >= 0.0 && e.initial_level <= e.capacity,
            "initial_battery must lie in [0, battery]");

    const auto& c = config.censoring;
    require(c.alpha_x >= 0.0 && c.alpha_x <= 1.0, "alpha_x must lie in [0,1]");
    require(c.eta >= 0.0, "eta must be >= 0");
    require(c.rho_smoothing > 0.0 && c.rho_smoothing <= 1.0,
            "rho_smoothing must lie in (0,1]");
    require(c.rho_lo > 0.0 && c.rho_lo <= c.rho_hi && c.rho_hi < 1.0,
            "rho_clamp must satisfy 0 < lo <= hi < 1");
}

} // namespace cdatc
