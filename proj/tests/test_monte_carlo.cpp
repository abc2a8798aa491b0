#include <doctest.h>

#include "cdatc/monte_carlo.hpp"
#include "cdatc/simulator.hpp"

using namespace cdatc;

namespace {

SimConfig mc_config(Scheme scheme, long steps, long runs) {
    SimConfig config;
    config.signal.noise_variances = default_noise_profile();
    config.scheme = scheme;
    config.n_steps = steps;
    config.runs = runs;
    config.seed = 99;
    return config;
}

} // namespace

TEST_CASE("serial and parallel execution produce identical results") {
    const auto config = mc_config(Scheme::cd_atc, 300, 8);
    const auto serial = monte_carlo(config, Execution::serial);
    const auto parallel = monte_carlo(config, Execution::parallel);
    CHECK(serial.nmsd == parallel.nmsd);
    CHECK(serial.nmsd_db == parallel.nmsd_db);
    CHECK(serial.mean_tau == parallel.mean_tau);
    CHECK(serial.transmit_rate == parallel.transmit_rate);
    CHECK(serial.stall_rate == parallel.stall_rate);
    CHECK(serial.invariant_violations == parallel.invariant_violations);

    // And a replay of the parallel path is stable too.
    const auto again = monte_carlo(config, Execution::parallel);
    CHECK(again.nmsd == parallel.nmsd);
}

TEST_CASE("one run reduces to the single-run trace") {
    const auto config = mc_config(Scheme::nsd_atc, 250, 1);
    const auto mc = monte_carlo(config);
    const auto trace = run_single(config, 0);
    REQUIRE(mc.nmsd.size() == trace.nmsd.size());
    for (std::size_t i = 0; i < mc.nmsd.size(); ++i) {
        CHECK(mc.nmsd[i] == trace.nmsd[i]);
    }
}

TEST_CASE("steady-state summary uses the trailing window") {
    const auto config = mc_config(Scheme::unconstrained, 200, 2);
    const auto mc = monte_carlo(config, Execution::parallel, 50);
    CHECK(mc.steady_window == 50);
    double acc = 0.0;
    for (long s = 150; s < 200; ++s) acc += mc.nmsd[static_cast<std::size_t>(s)];
    CHECK(mc.steady_state_nmsd_db() == to_db(acc / 50.0));
}

TEST_CASE("unconstrained transmit rate is one everywhere") {
    const auto config = mc_config(Scheme::unconstrained, 100, 2);
    const auto mc = monte_carlo(config);
    for (int k = 0; k < mc.n_nodes; ++k) {
        CHECK(mc.transmit_rate[static_cast<std::size_t>(k)] == 1.0);
        CHECK(mc.stall_rate[static_cast<std::size_t>(k)] == 0.0);
    }
    CHECK(mc.mean_tau.empty()); // no censoring scheme, no tau curves
}

TEST_CASE("tau curves are emitted for the censoring scheme only") {
    const auto config = mc_config(Scheme::cd_atc, 100, 2);
    const auto mc = monte_carlo(config);
    REQUIRE(mc.censoring_active);
    REQUIRE(mc.mean_tau.size() == static_cast<std::size_t>(mc.n_nodes));
    CHECK(mc.mean_tau[0].size() == static_cast<std::size_t>(mc.n_steps));
}
