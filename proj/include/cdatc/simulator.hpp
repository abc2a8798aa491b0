#pragma once

#include <cstdint>
#include <vector>

#include "cdatc/config.hpp"
#include "cdatc/rng.hpp"
#include "cdatc/signal_model.hpp"

namespace cdatc {

// Per-node, per-step record. battery and tau are the post-step values;
// sq_deviation is ||w_o - w_k(n)||^2 after the combine phase.
struct StepRecord {
    double battery = 0.0;
    double tau = 0.0;
    double sq_deviation = 0.0;
    std::uint8_t action = 0;      // decided action a_k(n)
    std::uint8_t stalled = 0;
    std::uint8_t transmitted = 0; // action performed (a=1 and not stalled)

    bool operator==(const StepRecord&) const = default;
};

struct SimTrace {
    int n_nodes = 0;
    long n_steps = 0;
    std::vector<StepRecord> records;            // step-major
    std::vector<double> nmsd;                   // per step, linear scale
    std::vector<std::uint64_t> transmit_count;  // per node, whole run
    std::uint64_t invariant_violations = 0;

    const StepRecord& at(long step, int node) const {
        return records[static_cast<std::size_t>(step) *
                           static_cast<std::size_t>(n_nodes) +
                       static_cast<std::size_t>(node)];
    }

    bool operator==(const SimTrace&) const = default;
};

// Fraction of steps in [begin, end) where the node actually broadcast.
double transmit_rate(const SimTrace& trace, int node, long begin, long end);

// State of one node inside a run.
struct NodeRuntime {
    NodeEstimator est;
    EnergyState energy;
    CensorState censor;
    NodeSignalProfile profile;
    rng::NormalStream regressor_stream;
    rng::NormalStream noise_stream;
    rng::UniformStream harvest_stream;
};

// One synchronous-network run. Steps are strictly sequential; all
// randomness comes from per-(run, node, purpose) substreams of the master
// seed, and every stream consumes a fixed number of draws per step so that
// schemes sharing a seed see identical realizations.
class NetworkSim {
public:
    struct NodeStepInfo {
        int action = 0;
        bool stalled = false;
        bool transmitted = false;
        double battery = 0.0;
        double tau = 0.0;
        double importance = 0.0;
        double sq_deviation = 0.0;
    };

    NetworkSim(const SimConfig& config, std::uint32_t run_index);

    void step();

    long current_step() const { return step_; }
    const std::vector<NodeStepInfo>& last_step() const { return last_step_; }
    double last_nmsd() const { return last_nmsd_; }
    std::uint64_t invariant_violations() const { return violations_; }

    const std::vector<double>& ground_truth() const { return ground_truth_; }
    NodeRuntime& node(int k) { return nodes_[static_cast<std::size_t>(k)]; }
    const NodeRuntime& node(int k) const {
        return nodes_[static_cast<std::size_t>(k)];
    }

private:
    struct Message {
        int from = 0;
        std::vector<double> w;
        double smoothed_error = 0.0;
    };

    void deliver_pending();
    void check_invariants(int k, double importance_value);

    const SimConfig config_;
    bool energy_on_ = true;
    bool censor_on_ = true;
    long step_ = 0;
    std::vector<double> ground_truth_;
    rng::NormalStream ground_truth_stream_;
    std::vector<NodeRuntime> nodes_;
    std::vector<Message> pending_;  // broadcast last step, delivered now
    std::vector<Message> outgoing_; // broadcast this step
    std::vector<NodeStepInfo> last_step_;
    double last_nmsd_ = 0.0;
    std::uint64_t violations_ = 0;
    std::vector<double> u_buf_;
    std::vector<double> j_buf_;
};

// Run the configured horizon and collect the full trace.
SimTrace run_single(const SimConfig& config, std::uint32_t run_index = 0);

} // namespace cdatc
