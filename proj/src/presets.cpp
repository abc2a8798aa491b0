#include "cdatc/presets.hpp"

#include "cdatc/errors.hpp"

namespace cdatc {

namespace {

constexpr const char* kCommonHeader = R"([network]
nodes = 7
edges = [[1,2],[1,3],[2,3],[5,6],[5,7],[6,7],[4,1],[4,2],[4,3],[4,5],[4,6],[4,7]]

[signal]
taps = 50
signal_power = 1
noise_variances = [1e-4,1e-4,1e-4,0.01,0.5,0.5,0.5]

[diffusion]
mu = 0.1
delta = 1e-5
combiner = adaptive-ls

[energy]
battery = 500
sense_cost = 1
tx_cost = 2
harvest_range = [2,4]
initial_battery = 500
)";

std::string with_tail(double harvest_prob, const std::string& schemes) {
    std::string text = kCommonHeader;
    text += "harvest_prob = ";
    text += harvest_prob == 0.4 ? "0.4" : "0.8";
    text += R"(

[censoring]
censoring = on
alpha_x = 0.1
eta = 0.01
tau_init = 0
rho_smoothing = 0.05
rho_clamp = [0.01,0.99]

[sim]
schemes = [)";
    text += schemes;
    text += R"(]
steps = 10000
runs = 50
seed = 1
)";
    return text;
}

} // namespace

std::vector<std::string> preset_names() {
    return {"fig2a", "fig2b", "fig3a", "fig3b", "unconstrained"};
}

std::string preset_text(const std::string& name) {
    if (name == "fig2a") {
        return with_tail(0.4, "unconstrained, nsd-atc, cd-atc");
    }
    if (name == "fig2b") {
        return with_tail(0.8, "unconstrained, nsd-atc, cd-atc");
    }
    if (name == "fig3a") return with_tail(0.4, "cd-atc");
    if (name == "fig3b") return with_tail(0.8, "cd-atc");
    if (name == "unconstrained") return with_tail(0.4, "unconstrained");
    fail(ErrorCode::unknown_preset,
         "no preset named '" + name + "' (known: fig2a, fig2b, fig3a, fig3b, "
         "unconstrained)");
}

ScenarioSpec preset_scenario(const std::string& name) {
    return parse_scenario_text(preset_text(name), "preset:" + name);
}

} // namespace cdatc
