#include "cdatc/monte_carlo.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>
#include <utility>

#include "cdatc/simulator.hpp"

namespace cdatc {

double to_db(double linear) {
    // Floor keeps exactly-converged curves plottable.
    return 10.0 * std::log10(std::max(linear, 1e-300));
}

double MonteCarloResult::steady_state_nmsd_db() const {
    double acc = 0.0;
    for (long s = n_steps - steady_window; s < n_steps; ++s) {
        acc += nmsd[static_cast<std::size_t>(s)];
    }
    return to_db(acc / static_cast<double>(steady_window));
}

namespace {

// Everything one run contributes to the averages.
struct RunReduction {
    std::vector<double> nmsd;                  // per step
    std::vector<std::vector<double>> tau;      // [node][step]
    std::vector<std::uint64_t> transmits;      // per node, steady window
    std::vector<std::uint64_t> stalls;         // per node, whole horizon
    std::uint64_t violations = 0;
};

RunReduction reduce_run(const SimConfig& config, std::uint32_t run_index,
                        long steady_begin, bool want_tau) {
    const int n = config.topology.n_nodes();
    RunReduction red;
    red.nmsd.reserve(static_cast<std::size_t>(config.n_steps));
    if (want_tau) {
        red.tau.assign(static_cast<std::size_t>(n),
                       std::vector<double>(
                           static_cast<std::size_t>(config.n_steps), 0.0));
    }
    red.transmits.assign(static_cast<std::size_t>(n), 0);
    red.stalls.assign(static_cast<std::size_t>(n), 0);

    NetworkSim sim(config, run_index);
    for (long s = 0; s < config.n_steps; ++s) {
        sim.step();
        red.nmsd.push_back(sim.last_nmsd());
        for (int k = 0; k < n; ++k) {
            const auto& info = sim.last_step()[static_cast<std::size_t>(k)];
            if (want_tau) {
                red.tau[static_cast<std::size_t>(k)]
                       [static_cast<std::size_t>(s)] = info.tau;
            }
            if (s >= steady_begin && info.transmitted) {
                ++red.transmits[static_cast<std::size_t>(k)];
            }
            if (info.stalled) ++red.stalls[static_cast<std::size_t>(k)];
        }
    }
    red.violations = sim.invariant_violations();
    return red;
}

} // namespace

MonteCarloResult monte_carlo(const SimConfig& config, Execution execution,
                             long steady_window) {
    validate_config(config);
    const int n = config.topology.n_nodes();
    const long runs = config.runs;
    if (steady_window <= 0) steady_window = std::max<long>(config.n_steps / 10, 1);
    steady_window = std::min(steady_window, config.n_steps);
    const long steady_begin = config.n_steps - steady_window;
    const bool want_tau = config.censoring_enabled();

    std::vector<RunReduction> slots(static_cast<std::size_t>(runs));
    std::exception_ptr first_error;

    if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long r = 0; r < runs; ++r) {
            try {
                slots[static_cast<std::size_t>(r)] = reduce_run(
                    config, static_cast<std::uint32_t>(r), steady_begin,
                    want_tau);
            } catch (...) {
#pragma omp critical
                if (!first_error) first_error = std::current_exception();
            }
        }
    } else {
        for (long r = 0; r < runs; ++r) {
            slots[static_cast<std::size_t>(r)] = reduce_run(
                config, static_cast<std::uint32_t>(r), steady_begin, want_tau);
        }
    }
    if (first_error) std::rethrow_exception(first_error);

    MonteCarloResult out;
    out.scheme = scheme_label(config.scheme);
    out.censoring_active = want_tau;
    out.n_nodes = n;
    out.n_steps = config.n_steps;
    out.runs = runs;
    out.steady_window = steady_window;
    out.nmsd.assign(static_cast<std::size_t>(config.n_steps), 0.0);
    if (want_tau) {
        out.mean_tau.assign(
            static_cast<std::size_t>(n),
            std::vector<double>(static_cast<std::size_t>(config.n_steps), 0.0));
    }
    out.transmit_rate.assign(static_cast<std::size_t>(n), 0.0);
    out.stall_rate.assign(static_cast<std::size_t>(n), 0.0);

    // Merge in run order; float sums stay identical for both executions.
    for (long r = 0; r < runs; ++r) {
        const auto& red = slots[static_cast<std::size_t>(r)];
        for (long s = 0; s < config.n_steps; ++s) {
            out.nmsd[static_cast<std::size_t>(s)] +=
                red.nmsd[static_cast<std::size_t>(s)];
        }
        for (int k = 0; k < n; ++k) {
            if (want_tau) {
                auto& acc = out.mean_tau[static_cast<std::size_t>(k)];
                const auto& src = red.tau[static_cast<std::size_t>(k)];
                for (long s = 0; s < config.n_steps; ++s) {
                    acc[static_cast<std::size_t>(s)] +=
                        src[static_cast<std::size_t>(s)];
                }
            }
            out.transmit_rate[static_cast<std::size_t>(k)] +=
                static_cast<double>(red.transmits[static_cast<std::size_t>(k)]);
            out.stall_rate[static_cast<std::size_t>(k)] +=
                static_cast<double>(red.stalls[static_cast<std::size_t>(k)]);
        }
        out.invariant_violations += red.violations;
    }

    const double inv_runs = 1.0 / static_cast<double>(runs);
    for (double& v : out.nmsd) v *= inv_runs;
    for (auto& per_node : out.mean_tau) {
        for (double& v : per_node) v *= inv_runs;
    }
    for (int k = 0; k < n; ++k) {
        out.transmit_rate[static_cast<std::size_t>(k)] *=
            inv_runs / static_cast<double>(steady_window);
        out.stall_rate[static_cast<std::size_t>(k)] *=
            inv_runs / static_cast<double>(config.n_steps);
    }
    out.nmsd_db.resize(out.nmsd.size());
    for (std::size_t i = 0; i < out.nmsd.size(); ++i) {
        out.nmsd_db[i] = to_db(out.nmsd[i]);
    }
    return out;
}

} // namespace cdatc
