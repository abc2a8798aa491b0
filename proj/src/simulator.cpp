#include "cdatc/simulator.hpp"

#include <algorithm>
#include <string>

#include "cdatc/errors.hpp"
#include "cdatc/vecmath.hpp"

namespace cdatc {

namespace {

constexpr double kSimplexTol = 1e-12;

} // namespace

double transmit_rate(const SimTrace& trace, int node, long begin, long end) {
    if (node < 0 || node >= trace.n_nodes) {
        fail(ErrorCode::index_out_of_range,
             "node " + std::to_string(node) + " outside trace");
    }
    if (begin < 0 || end > trace.n_steps || begin >= end) {
        fail(ErrorCode::window_out_of_range,
             "window [" + std::to_string(begin) + "," + std::to_string(end) +
                 ") not inside [0," + std::to_string(trace.n_steps) + ")");
    }
    long count = 0;
    for (long n = begin; n < end; ++n) {
        count += trace.at(n, node).transmitted;
    }
    return static_cast<double>(count) / static_cast<double>(end - begin);
}

NetworkSim::NetworkSim(const SimConfig& config, std::uint32_t run_index)
    : config_(config),
      energy_on_(config.energy_enabled()),
      censor_on_(config.censoring_enabled()),
      ground_truth_stream_(rng::derive_seed(
          config.seed, config.signal.redraw_per_run ? run_index : 0, 0,
          rng::Purpose::ground_truth)) {
    validate_config(config_);
    const int n = config_.topology.n_nodes();
    ground_truth_ = draw_ground_truth(config_.signal.taps, ground_truth_stream_);
    nodes_.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        NodeRuntime node{
            NodeEstimator::make(config_.topology, k, config_.signal.taps,
                                config_.diffusion.mu, config_.diffusion.delta),
            EnergyState{config_.energy.initial_level},
            CensorState{},
            NodeSignalProfile(
                config_.signal.noise_variances[static_cast<std::size_t>(k)],
                config_.signal.signal_power),
            rng::NormalStream(rng::derive_seed(config_.seed, run_index,
                                               static_cast<std::uint64_t>(k),
                                               rng::Purpose::regressor)),
            rng::NormalStream(rng::derive_seed(config_.seed, run_index,
                                               static_cast<std::uint64_t>(k),
                                               rng::Purpose::noise)),
            rng::UniformStream(rng::derive_seed(config_.seed, run_index,
                                                static_cast<std::uint64_t>(k),
                                                rng::Purpose::harvest)),
        };
        node.censor.tau = config_.censoring.tau_init;
        if (!energy_on_) node.energy.level = config_.energy.capacity;
        nodes_.push_back(std::move(node));
    }
    last_step_.resize(static_cast<std::size_t>(n));
    u_buf_.resize(static_cast<std::size_t>(config_.signal.taps));
}

void NetworkSim::deliver_pending() {
    for (auto& node : nodes_) {
        for (auto& slot : node.est.inbox) slot.fresh = false;
    }
    for (const auto& msg : pending_) {
        for (int k : config_.topology.neighbors(msg.from, false)) {
            auto& est = nodes_[static_cast<std::size_t>(k)].est;
            const auto it =
                std::lower_bound(est.hood.begin(), est.hood.end(), msg.from);
            const auto slot = static_cast<std::size_t>(it - est.hood.begin());
            est.inbox[slot].w = msg.w;
            est.inbox[slot].smoothed_error = msg.smoothed_error;
            est.inbox[slot].has_estimate = true;
            est.inbox[slot].fresh = true;
        }
    }
    pending_.clear();
}

void NetworkSim::check_invariants(int k, double importance_value) {
    const auto& node = nodes_[static_cast<std::size_t>(k)];
    if (energy_on_) {
        if (node.energy.level < 0.0 ||
            node.energy.level > config_.energy.capacity) {
            ++violations_;
        }
    }
    if (simplex_violation(node.est.weights) > kSimplexTol) ++violations_;
    if (importance_value < 0.0) ++violations_;
}

void NetworkSim::step() {
    const int n = config_.topology.n_nodes();
    const auto& ep = config_.energy;

    if (config_.signal.jump_step >= 0 && step_ == config_.signal.jump_step) {
        ground_truth_ =
            draw_ground_truth(config_.signal.taps, ground_truth_stream_);
    }

    deliver_pending();

    double nmsd_acc = 0.0;
    for (int k = 0; k < n; ++k) {
        auto& node = nodes_[static_cast<std::size_t>(k)];
        auto& info = last_step_[static_cast<std::size_t>(k)];

        // Data and harvest are drawn every step, used or not, so stream
        // positions never depend on scheme decisions.
        sample_regressor_into(node.profile, u_buf_, node.regressor_stream);
        const double d =
            observe(ground_truth_, u_buf_, node.profile, node.noise_stream);
        const double h = energy_on_ ? draw_harvest(ep, node.harvest_stream) : 0.0;

        int action = 1;
        double x = 0.0;
        if (censor_on_) {
            j_buf_.clear();
            for (std::size_t i = 0; i < node.est.hood.size(); ++i) {
                j_buf_.push_back(i == node.est.self_slot
                                     ? node.censor.smoothed_error
                                     : node.est.inbox[i].smoothed_error);
            }
            x = importance(node.censor.smoothed_error, j_buf_);
            action = decide(x, node.censor.tau);
            update_threshold(node.censor, action, config_.censoring);
        }

        bool stalled = false;
        if (energy_on_) {
            const double consumption = ep.sense_cost + action * ep.tx_cost;
            stalled = node.energy.level - consumption + h <= 0.0;
        }

        bool transmitted = false;
        if (!stalled) {
            const double xi = nlms_adapt(node.est, u_buf_, d);
            update_combiners(node.est, config_.topology,
                             config_.diffusion.combiner, xi, u_buf_, d);
            if (censor_on_) {
                // Check error against the combined estimate of the previous
                // step; J_k(n) is ready before combine overwrites w.
                const double check = d - vec::dot(node.est.w, u_buf_);
                update_local_mse(node.censor, check, config_.censoring.alpha_x);
            }
            combine(node.est);
            if (action == 1) {
                outgoing_.push_back(
                    Message{k, node.est.w, node.censor.smoothed_error});
                transmitted = true;
            }
            if (energy_on_) {
                const double b = energy_cost(ep.sense_cost, action, ep.tx_cost, h);
                step_battery(node.energy, b, ep.capacity);
                if (censor_on_) {
                    update_cost_estimates(node.censor, action, b,
                                          config_.censoring);
                }
            }
        } else {
            step_battery(node.energy, idle_cost(ep, h), ep.capacity);
        }

        info.action = action;
        info.stalled = stalled;
        info.transmitted = transmitted;
        info.battery = node.energy.level;
        info.tau = node.censor.tau;
        info.importance = x;
        info.sq_deviation = vec::sq_dist(ground_truth_, node.est.w);
        nmsd_acc += info.sq_deviation;

        check_invariants(k, x);
    }
    last_nmsd_ = nmsd_acc / static_cast<double>(n);

    std::swap(pending_, outgoing_);
    outgoing_.clear();
    ++step_;
}

SimTrace run_single(const SimConfig& config, std::uint32_t run_index) {
    NetworkSim sim(config, run_index);
    const int n = config.topology.n_nodes();
    SimTrace trace;
    trace.n_nodes = n;
    trace.n_steps = config.n_steps;
    trace.records.reserve(static_cast<std::size_t>(n) *
                          static_cast<std::size_t>(config.n_steps));
    trace.nmsd.reserve(static_cast<std::size_t>(config.n_steps));
    trace.transmit_count.assign(static_cast<std::size_t>(n), 0);
    for (long s = 0; s < config.n_steps; ++s) {
        sim.step();
        for (int k = 0; k < n; ++k) {
            const auto& info = sim.last_step()[static_cast<std::size_t>(k)];
            trace.records.push_back(StepRecord{
                info.battery, info.tau, info.sq_deviation,
                static_cast<std::uint8_t>(info.action),
                static_cast<std::uint8_t>(info.stalled),
                static_cast<std::uint8_t>(info.transmitted)});
            trace.transmit_count[static_cast<std::size_t>(k)] +=
                info.transmitted;
        }
        trace.nmsd.push_back(sim.last_nmsd());
    }
    trace.invariant_violations = sim.invariant_violations();
    return trace;
}

} // namespace cdatc
