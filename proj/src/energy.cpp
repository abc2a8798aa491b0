#include "cdatc/energy.hpp"

#include <algorithm>

namespace cdatc {

double draw_harvest(const EnergyParams& params, rng::UniformStream& stream) {
    const double gate = stream.next();
    const double amount = stream.next();
    if (gate >= params.harvest_prob) return 0.0;
    return params.harvest_min + (params.harvest_max - params.harvest_min) * amount;
}

double energy_cost(double sense_cost, int action, double tx_cost, double harvest) {
    return sense_cost + action * tx_cost - harvest;
}

double idle_cost(const EnergyParams& /*params*/, double harvest) {
    return -harvest;
}

void step_battery(EnergyState& state, double cost, double capacity) {
    state.level = std::max(std::min(state.level - cost, capacity), 0.0);
}

} // namespace cdatc
