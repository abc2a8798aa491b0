#pragma once

#include <cstdint>
#include <span>

namespace cdatc {

// Adaptive-balanced-transmitter parameters.
struct CensorParams {
    bool enabled = true;
    double alpha_x = 0.1;        // smoothing of the local squared error
    double eta = 0.01;           // threshold stepsize
    double tau_init = 0.0;
    double rho_smoothing = 0.05; // smoothing of the per-action cost estimates
    double rho_lo = 0.01;
    double rho_hi = 0.99;
};

// Per-node censoring state.
struct CensorState {
    double tau = 0.0;
    double smoothed_error = 0.0;  // J
    double cost_censor = 0.0;     // running estimate of E[b | a=0]
    double cost_transmit = 0.0;   // running estimate of E[b | a=1]
    std::uint64_t censor_samples = 0;
    std::uint64_t transmit_samples = 0;
};

// J <- (1-alpha)*J + alpha*check_error^2. The check error is computed with
// the combined estimate w, not the local psi.
void update_local_mse(CensorState& state, double check_error, double alpha_x);

// x = max{ mean(neighborhood_J) - J_own, 0 }. The list spans the
// self-inclusive neighborhood, so it contains J_own as one entry.
double importance(double J_own, std::span<const double> neighborhood_J);

// a = 1 iff x > tau; ties censor.
int decide(double x, double tau);

// Cost ratio rho = b1 / (b1 - b0), clamped; 0.5 until both actions have at
// least one sample.
double rho_estimate(const CensorState& state, const CensorParams& params);

// tau <- tau + eta * [rho*a - (1-rho)*(1-a)]
void update_threshold(CensorState& state, int action, const CensorParams& params);

// Exponentially smooth the cost estimate matching the performed action.
// observed_cost is the realized per-step energy cost including harvesting.
void update_cost_estimates(CensorState& state, int action, double observed_cost,
                           const CensorParams& params);

} // namespace cdatc
