#pragma once

#include "cdatc/rng.hpp"

namespace cdatc {

// Battery and harvesting parameters shared by all nodes of a scenario.
struct EnergyParams {
    double capacity = 500.0;       // B
    double sense_cost = 1.0;       // b0, includes the adaptation cost
    double tx_cost = 2.0;          // extra cost of one broadcast
    double harvest_prob = 0.4;     // p_h
    double harvest_min = 2.0;
    double harvest_max = 4.0;
    double initial_level = 500.0;  // e(0)
};

struct EnergyState {
    double level = 0.0;
};

// With probability harvest_prob returns a uniform draw on
// [harvest_min, harvest_max], otherwise 0. Always consumes exactly two
// uniforms so stream positions do not depend on outcomes.
double draw_harvest(const EnergyParams& params, rng::UniformStream& stream);

// b = b0 + a*tx_cost - h; negative means net refill.
double energy_cost(double sense_cost, int action, double tx_cost, double harvest);

// Cost of a stalled step: the node spends nothing but still harvests.
double idle_cost(const EnergyParams& params, double harvest);

// level <- clip(level - cost, [0, capacity])
void step_battery(EnergyState& state, double cost, double capacity);

} // namespace cdatc
