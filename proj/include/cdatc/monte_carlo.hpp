#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdatc/config.hpp"

namespace cdatc {

enum class Execution {
    serial,   // reference path, one run after another
    parallel, // OpenMP over run indices
};

// Run-averaged learning curves and steady-state summaries for one scheme.
// Values are bit-identical between serial and parallel execution: each run
// reduces into its own slot and slots merge in run-index order.
struct MonteCarloResult {
    std::string scheme;
    bool censoring_active = false;
    int n_nodes = 0;
    long n_steps = 0;
    long runs = 0;
    long steady_window = 0; // trailing steps used for steady-state figures

    std::vector<double> nmsd;               // per step, linear scale
    std::vector<double> nmsd_db;            // 10*log10(nmsd)
    std::vector<std::vector<double>> mean_tau; // [node][step], run-averaged
    std::vector<double> transmit_rate;      // per node, steady window
    std::vector<double> stall_rate;         // per node, whole horizon
    std::uint64_t invariant_violations = 0;

    double steady_state_nmsd_db() const;
};

// Monte-Carlo average over config.runs independent runs. steady_window <= 0
// selects the default (last 10% of the horizon, at least one step).
MonteCarloResult monte_carlo(const SimConfig& config,
                             Execution execution = Execution::parallel,
                             long steady_window = 0);

double to_db(double linear);

} // namespace cdatc
