#include "cdatc/censoring.hpp"

#include <algorithm>

namespace cdatc {

void update_local_mse(CensorState& state, double check_error, double alpha_x) {
    state.smoothed_error = (1.0 - alpha_x) * state.smoothed_error +
                           alpha_x * check_error * check_error;
}

double importance(double J_own, std::span<const double> neighborhood_J) {
    // Deviation form of mean(J) - J_own: exact zero when all entries equal.
    double acc = 0.0;
    for (double j : neighborhood_J) acc += j - J_own;
    return std::max(acc / static_cast<double>(neighborhood_J.size()), 0.0);
}

int decide(double x, double tau) { return x > tau ? 1 : 0; }

double rho_estimate(const CensorState& state, const CensorParams& params) {
    if (state.censor_samples == 0 || state.transmit_samples == 0) return 0.5;
    const double denom = state.cost_transmit - state.cost_censor;
    if (denom == 0.0) return 0.5;
    return std::clamp(state.cost_transmit / denom, params.rho_lo, params.rho_hi);
}

void update_threshold(CensorState& state, int action, const CensorParams& params) {
    const double rho = rho_estimate(state, params);
    state.tau += params.eta * (rho * action - (1.0 - rho) * (1 - action));
}

void update_cost_estimates(CensorState& state, int action, double observed_cost,
                           const CensorParams& params) {
    const double lambda = params.rho_smoothing;
    if (action == 1) {
        state.cost_transmit = (1.0 - lambda) * state.cost_transmit + lambda * observed_cost;
        ++state.transmit_samples;
    } else {
        state.cost_censor = (1.0 - lambda) * state.cost_censor + lambda * observed_cost;
        ++state.censor_samples;
    }
}

} // namespace cdatc
