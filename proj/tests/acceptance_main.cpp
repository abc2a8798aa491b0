// Acceptance suite: runs every shipping criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "cdatc/monte_carlo.hpp"
#include "cdatc/presets.hpp"
#include "cdatc/simulator.hpp"

using namespace cdatc;

namespace {

int g_failures = 0;

void report(int id, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

// ---------------------------------------------------------------- criterion 1

void criterion_1_oracle_equivalence() {
    const double t0 = now_s();
    auto spec = preset_scenario("fig2a");
    spec.steps = 10000;

    auto cd = build_config(spec, Scheme::cd_atc);
    cd.censoring.enabled = false;
    const auto nsd = build_config(spec, Scheme::nsd_atc);

    const SimTrace a = run_single(cd, 0);
    const SimTrace b = run_single(nsd, 0);
    const double elapsed = now_s() - t0;

    const bool equal = a == b;
    const bool fast = elapsed < 10.0;
    report(1, equal && fast,
           fmt("CD-ATC with censoring off vs NSD-ATC over %ld steps, 7 nodes: "
               "traces %s, %.2f s (budget 10 s)",
               spec.steps, equal ? "bit-identical" : "DIFFER", elapsed));
}

// ------------------------------------------------------- shared full scenarios

struct ScenarioResults {
    std::vector<MonteCarloResult> schemes; // unconstrained, nsd, cd
    double wall_s = 0.0;

    const MonteCarloResult& by_scheme(Scheme s) const {
        for (const auto& r : schemes) {
            if (r.scheme == scheme_label(s)) return r;
        }
        std::abort();
    }
};

ScenarioResults run_figure2(const std::string& preset) {
    const auto spec = preset_scenario(preset);
    ScenarioResults out;
    const double t0 = now_s();
    for (Scheme s : spec.schemes) {
        out.schemes.push_back(
            monte_carlo(build_config(spec, s), Execution::parallel, 1000));
    }
    out.wall_s = now_s() - t0;
    return out;
}

// ---------------------------------------------------------------- criterion 2

void criterion_2_invariants(const ScenarioResults& fig2a) {
    std::uint64_t violations = 0;
    for (const auto& r : fig2a.schemes) violations += r.invariant_violations;
    const bool fast = fig2a.wall_s < 120.0;
    report(2, violations == 0 && fast,
           fmt("fig2a sweep (3 schemes x 50 runs x 10000 steps): %llu "
               "invariant violations (battery bounds, weight simplex 1e-12, "
               "importance >= 0), %.1f s (budget 120 s)",
               static_cast<unsigned long long>(violations), fig2a.wall_s));
}

// ---------------------------------------------------------------- criterion 3

// Independent oracle for the threshold recursion: i.i.d. continuous
// importance values against the bare stochastic-gradient update with rho
// pinned to its expected-cost value.
double threshold_recursion_oracle(double rho, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> x_dist(4.0);
    double tau = 0.0;
    const double eta = 0.01;
    long transmitted = 0;
    const long steps = 100000;
    for (long n = 0; n < steps; ++n) {
        const int a = x_dist(rng) > tau ? 1 : 0;
        tau += eta * (rho * a - (1.0 - rho) * (1 - a));
        transmitted += a;
    }
    return static_cast<double>(transmitted) / static_cast<double>(steps);
}

void criterion_3_balanced_rates(const ScenarioResults& fig2a,
                                const ScenarioResults& fig2b) {
    bool pass = true;
    std::string detail;

    const struct {
        const ScenarioResults* scenario;
        double rho;
    } cases[] = {{&fig2a, 0.9}, {&fig2b, 0.3}};

    for (const auto& c : cases) {
        const double target = 1.0 - c.rho;
        const double oracle = threshold_recursion_oracle(c.rho, 1234);
        if (std::abs(oracle - target) >= 0.05) pass = false;

        const auto& cd = c.scenario->by_scheme(Scheme::cd_atc);
        double lo = 1.0, hi = 0.0;
        for (double r : cd.transmit_rate) {
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            if (std::abs(r - target) >= 0.05) pass = false;
        }
        detail += fmt("rho=%.1f: oracle %.3f, sim per-node [%.3f, %.3f] "
                      "(target %.2f +-0.05); ",
                      c.rho, oracle, lo, hi, target);
    }
    report(3, pass, "balanced transmit fraction 1-rho: " + detail);
}

// ---------------------------------------------------------------- criterion 4

void criterion_4_nmsd_ordering(const ScenarioResults& fig2a,
                               const ScenarioResults& fig2b) {
    const double un_a = fig2a.by_scheme(Scheme::unconstrained).steady_state_nmsd_db();
    const double cd_a = fig2a.by_scheme(Scheme::cd_atc).steady_state_nmsd_db();
    const double ns_a = fig2a.by_scheme(Scheme::nsd_atc).steady_state_nmsd_db();
    const double un_b = fig2b.by_scheme(Scheme::unconstrained).steady_state_nmsd_db();
    const double cd_b = fig2b.by_scheme(Scheme::cd_atc).steady_state_nmsd_db();
    const double ns_b = fig2b.by_scheme(Scheme::nsd_atc).steady_state_nmsd_db();

    const bool order_a = un_a <= cd_a && cd_a <= ns_a;
    const bool order_b = un_b <= cd_b && cd_b <= ns_b;
    const bool gap = (ns_a - cd_a) > (ns_b - cd_b);
    const bool close_a = cd_a - un_a < 3.0;
    const bool close_b = cd_b - un_b < 3.0;
    const bool fast = fig2a.wall_s < 300.0 && fig2b.wall_s < 300.0;

    report(4, order_a && order_b && gap && close_a && close_b && fast,
           fmt("steady NMSD dB (last 1000, R=50) p=0.4: unc %.2f <= cd %.2f "
               "<= nsd %.2f %s; p=0.8: unc %.2f <= cd %.2f <= nsd %.2f %s; "
               "gap %.2f > %.2f %s; cd-unc margins %.2f/%.2f dB (< 3); "
               "%.0f s/%.0f s (budget 300 s each)",
               un_a, cd_a, ns_a, order_a ? "ok" : "VIOLATED", un_b, cd_b,
               ns_b, order_b ? "ok" : "VIOLATED", ns_a - cd_a, ns_b - cd_b,
               gap ? "ok" : "VIOLATED", cd_a - un_a, cd_b - un_b,
               fig2a.wall_s, fig2b.wall_s));
}

// ---------------------------------------------------------------- criterion 5

void criterion_5_threshold_levels(const ScenarioResults& fig2a,
                                  const ScenarioResults& fig2b) {
    const auto& cd_a = fig2a.by_scheme(Scheme::cd_atc);
    const auto& cd_b = fig2b.by_scheme(Scheme::cd_atc);
    bool pass = true;
    std::string detail = "steady mean tau per node (p=0.8 vs p=0.4): ";
    for (int k = 0; k < cd_a.n_nodes; ++k) {
        double mean_a = 0.0, mean_b = 0.0;
        for (long s = cd_a.n_steps - 1000; s < cd_a.n_steps; ++s) {
            mean_a += cd_a.mean_tau[static_cast<std::size_t>(k)]
                                   [static_cast<std::size_t>(s)];
            mean_b += cd_b.mean_tau[static_cast<std::size_t>(k)]
                                   [static_cast<std::size_t>(s)];
        }
        mean_a /= 1000.0;
        mean_b /= 1000.0;
        if (!(mean_b < mean_a)) pass = false;
        detail += fmt("n%d %.4f<%.4f%s ", k + 1, mean_b, mean_a,
                      mean_b < mean_a ? "" : " VIOLATED");
    }
    report(5, pass, detail);
}

// ---------------------------------------------------------------- criterion 6

void criterion_6_nlms_convergence() {
    int converged = 0;
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        SimConfig config;
        config.topology = Topology(1, std::vector<std::pair<int, int>>{});
        config.signal.taps = 50;
        config.signal.noise_variances = {0.0};
        config.diffusion.mu = 0.1;
        config.scheme = Scheme::unconstrained;
        config.n_steps = 5000;
        config.runs = 1;
        config.seed = seed;
        const SimTrace trace = run_single(config);
        const double final_dev = trace.at(4999, 0).sq_deviation;
        worst = std::max(worst, final_dev);
        if (final_dev < 1e-6) ++converged;
    }
    report(6, converged == 20,
           fmt("single-node noiseless NLMS (mu=0.1, M=50): %d/20 seeds below "
               "1e-6 within 5000 steps (worst %.2e)",
               converged, worst));
}

// ---------------------------------------------------------------- criterion 7

void criterion_7_depletion() {
    auto spec = preset_scenario("fig2a");
    spec.steps = 500;
    auto config = build_config(spec, Scheme::nsd_atc);
    config.energy.harvest_prob = 0.0;
    const SimTrace trace = run_single(config);

    bool pass = true;
    for (int k = 0; k < trace.n_nodes; ++k) {
        long first_stall = -1;
        for (long n = 0; n < trace.n_steps; ++n) {
            if (trace.at(n, k).stalled) {
                first_stall = n;
                break;
            }
        }
        if (first_stall != 166) pass = false;
    }
    report(7, pass,
           fmt("no harvesting, B=500, cost 3/step: every node's first stall "
               "at step index 166 (the 167th step): %s",
               pass ? "yes" : "no"));
}

} // namespace

int main() {
    std::printf("acceptance suite: censoring diffusion simulator\n");

    criterion_1_oracle_equivalence();

    const ScenarioResults fig2a = run_figure2("fig2a");
    criterion_2_invariants(fig2a);
    const ScenarioResults fig2b = run_figure2("fig2b");
    criterion_3_balanced_rates(fig2a, fig2b);
    criterion_4_nmsd_ordering(fig2a, fig2b);
    criterion_5_threshold_levels(fig2a, fig2b);
    criterion_6_nlms_convergence();
    criterion_7_depletion();

    std::printf("%d of 7 criteria failed\n", g_failures);
    return g_failures;
}
