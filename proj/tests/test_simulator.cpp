#include <doctest.h>

#include <cmath>
#include <vector>

#include "cdatc/errors.hpp"
#include "cdatc/rng.hpp"
#include "cdatc/simulator.hpp"
#include "cdatc/vecmath.hpp"

using namespace cdatc;

namespace {

using Edges = std::vector<std::pair<int, int>>;

SimConfig default_config(Scheme scheme, long steps) {
    SimConfig config;
    config.signal.noise_variances = default_noise_profile();
    config.scheme = scheme;
    config.n_steps = steps;
    config.runs = 1;
    config.seed = 2024;
    return config;
}

SimConfig small_config(int nodes, Scheme scheme, long steps) {
    SimConfig config;
    if (nodes == 1) {
        config.topology = Topology(1, Edges{});
    } else {
        Edges edges;
        for (int v = 1; v < nodes; ++v) edges.emplace_back(v - 1, v);
        config.topology = Topology(nodes, edges);
    }
    config.signal.taps = 8;
    config.signal.noise_variances.assign(static_cast<std::size_t>(nodes), 0.01);
    config.scheme = scheme;
    config.n_steps = steps;
    config.runs = 1;
    config.seed = 7;
    return config;
}

} // namespace

TEST_CASE("single unconstrained node is plain NLMS") {
    auto config = small_config(1, Scheme::unconstrained, 200);
    config.signal.noise_variances = {0.0};
    const SimTrace trace = run_single(config);

    // Re-derive the same substreams and replay the draw order by hand.
    rng::NormalStream gt(rng::derive_seed(config.seed, 0, 0, rng::Purpose::ground_truth));
    rng::NormalStream reg(rng::derive_seed(config.seed, 0, 0, rng::Purpose::regressor));
    rng::NormalStream noise(rng::derive_seed(config.seed, 0, 0, rng::Purpose::noise));
    const auto w_o = draw_ground_truth(config.signal.taps, gt);
    const NodeSignalProfile profile(0.0, 1.0);
    std::vector<double> psi(static_cast<std::size_t>(config.signal.taps), 0.0);
    for (long n = 0; n < config.n_steps; ++n) {
        const auto u = sample_regressor(profile, config.signal.taps, reg);
        const double d = observe(w_o, u, profile, noise);
        const double xi = d - vec::dot(psi, u);
        vec::axpy(config.diffusion.mu / (config.diffusion.delta + vec::sq_norm(u)) * xi,
                  u, psi);
        CHECK(trace.at(n, 0).sq_deviation == vec::sq_dist(w_o, psi));
    }
}

TEST_CASE("disabling censoring reproduces the non-selective scheme exactly") {
    auto cd = default_config(Scheme::cd_atc, 500);
    cd.censoring.enabled = false;
    auto nsd = default_config(Scheme::nsd_atc, 500);
    CHECK(run_single(cd) == run_single(nsd));
}

TEST_CASE("a never-censoring threshold reduces to the non-selective scheme") {
    // tau below every achievable importance and eta = 0: decisions are
    // always transmit, so estimates, actions and batteries match NSD-ATC;
    // only the recorded thresholds differ.
    auto cd = default_config(Scheme::cd_atc, 400);
    cd.censoring.tau_init = -1.0;
    cd.censoring.eta = 0.0;
    auto nsd = default_config(Scheme::nsd_atc, 400);
    const SimTrace a = run_single(cd);
    const SimTrace b = run_single(nsd);
    REQUIRE(a.n_steps == b.n_steps);
    for (long n = 0; n < a.n_steps; ++n) {
        for (int k = 0; k < a.n_nodes; ++k) {
            CHECK(a.at(n, k).action == b.at(n, k).action);
            CHECK(a.at(n, k).stalled == b.at(n, k).stalled);
            CHECK(a.at(n, k).battery == b.at(n, k).battery);
            CHECK(a.at(n, k).sq_deviation == b.at(n, k).sq_deviation);
        }
    }
}

TEST_CASE("neighbors of a dead node keep its last estimate") {
    auto config = small_config(2, Scheme::nsd_atc, 60);
    config.energy.harvest_prob = 0.0;
    NetworkSim sim(config, 0);
    sim.node(1).energy.level = 0.0; // node 2 starts empty and never refills

    const auto& inbox_slot = sim.node(0).est.inbox[1];
    const std::vector<double> zeros(static_cast<std::size_t>(config.signal.taps), 0.0);
    for (long n = 0; n < config.n_steps; ++n) {
        sim.step();
        CHECK(sim.last_step()[1].stalled);
        CHECK(inbox_slot.w == zeros);
        CHECK_FALSE(inbox_slot.fresh);
    }
}

TEST_CASE("messages arrive one step late") {
    auto config = small_config(2, Scheme::nsd_atc, 30);
    config.energy.harvest_prob = 1.0;
    config.energy.harvest_min = 10.0; // never stall
    config.energy.harvest_max = 11.0;
    NetworkSim sim(config, 0);

    std::vector<double> previous_w1;
    for (long n = 0; n < config.n_steps; ++n) {
        sim.step();
        const auto& slot = sim.node(0).est.inbox[1];
        if (n == 0) {
            CHECK_FALSE(slot.fresh); // nothing was in flight at step 0
        } else {
            CHECK(slot.fresh);
            CHECK(slot.w == previous_w1);
        }
        previous_w1 = sim.node(1).est.w;
    }
}

TEST_CASE("replays are identical and runs differ") {
    const auto config = default_config(Scheme::cd_atc, 300);
    const SimTrace a = run_single(config, 0);
    const SimTrace b = run_single(config, 0);
    CHECK(a == b);

    const SimTrace c = run_single(config, 1);
    CHECK(c.nmsd != a.nmsd);
}

TEST_CASE("invalid horizons are rejected") {
    auto config = default_config(Scheme::cd_atc, 100);
    config.n_steps = 0;
    CHECK_THROWS_AS((void)run_single(config), SimError);
    config.n_steps = 100;
    config.runs = 0;
    CHECK_THROWS_AS((void)run_single(config), SimError);
}

TEST_CASE("unconstrained baseline never stalls or censors") {
    const auto config = default_config(Scheme::unconstrained, 200);
    const SimTrace trace = run_single(config);
    for (long n = 0; n < trace.n_steps; ++n) {
        for (int k = 0; k < trace.n_nodes; ++k) {
            CHECK(trace.at(n, k).action == 1);
            CHECK_FALSE(trace.at(n, k).stalled);
            CHECK(trace.at(n, k).transmitted);
            CHECK(trace.at(n, k).battery == config.energy.capacity);
        }
    }
}

TEST_CASE("per-step NMSD is the node average of squared deviations") {
    const auto config = default_config(Scheme::cd_atc, 50);
    const SimTrace trace = run_single(config);
    for (long n = 0; n < trace.n_steps; ++n) {
        double acc = 0.0;
        for (int k = 0; k < trace.n_nodes; ++k) {
            acc += trace.at(n, k).sq_deviation;
            CHECK(trace.at(n, k).sq_deviation >= 0.0);
        }
        CHECK(trace.nmsd[static_cast<std::size_t>(n)] ==
              acc / trace.n_nodes);
    }
}

TEST_CASE("deterministic depletion stalls every node at the 167th step") {
    auto config = default_config(Scheme::nsd_atc, 300);
    config.energy.harvest_prob = 0.0;
    const SimTrace trace = run_single(config);
    for (int k = 0; k < trace.n_nodes; ++k) {
        for (long n = 0; n < trace.n_steps; ++n) {
            const bool expect_stall = n >= 166;
            CHECK(static_cast<bool>(trace.at(n, k).stalled) == expect_stall);
        }
    }
}

TEST_CASE("transmit rate bookkeeping") {
    auto config = default_config(Scheme::nsd_atc, 332);
    config.energy.harvest_prob = 0.0;
    const SimTrace trace = run_single(config);

    CHECK(transmit_rate(trace, 0, 0, 166) == 1.0);
    CHECK(transmit_rate(trace, 0, 0, 332) == 0.5);
    CHECK(transmit_rate(trace, 0, 166, 332) == 0.0);

    CHECK_THROWS_AS((void)transmit_rate(trace, 0, -1, 10), SimError);
    CHECK_THROWS_AS((void)transmit_rate(trace, 0, 0, 333), SimError);
    CHECK_THROWS_AS((void)transmit_rate(trace, 0, 10, 10), SimError);
    CHECK_THROWS_AS((void)transmit_rate(trace, 9, 0, 10), SimError);
}

TEST_CASE("ground-truth jump restarts convergence") {
    auto config = small_config(1, Scheme::unconstrained, 400);
    config.signal.noise_variances = {0.0};
    config.signal.jump_step = 200;
    const SimTrace trace = run_single(config);
    CHECK(trace.at(199, 0).sq_deviation < 1e-2);
    CHECK(trace.at(200, 0).sq_deviation > 10 * trace.at(199, 0).sq_deviation);
}

TEST_CASE("battery and simplex invariants hold over a full run") {
    for (const auto scheme : {Scheme::cd_atc, Scheme::nsd_atc}) {
        const auto config = default_config(scheme, 1000);
        const SimTrace trace = run_single(config);
        CHECK(trace.invariant_violations == 0);
        for (long n = 0; n < trace.n_steps; ++n) {
            for (int k = 0; k < trace.n_nodes; ++k) {
                CHECK(trace.at(n, k).battery >= 0.0);
                CHECK(trace.at(n, k).battery <= config.energy.capacity);
            }
        }
    }
}
