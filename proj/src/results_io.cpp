#include "cdatc/results_io.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "cdatc/errors.hpp"

namespace cdatc {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io_error, "cannot write " + path.string());
    return out;
}

nlohmann::ordered_json scenario_json(const ScenarioSpec& spec) {
    nlohmann::ordered_json j;
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : spec.edges) edges.push_back({a, b});
    j["network"] = {{"nodes", spec.nodes}, {"edges", edges}};
    j["signal"] = {{"taps", spec.taps},
                   {"signal_power", spec.signal_power},
                   {"noise_variances", spec.noise_variances}};
    j["diffusion"] = {{"mu", spec.mu},
                      {"delta", spec.delta},
                      {"combiner", combiner_token(spec.combiner)}};
    j["energy"] = {{"battery", spec.battery},
                   {"sense_cost", spec.sense_cost},
                   {"tx_cost", spec.tx_cost},
                   {"harvest_prob", spec.harvest_prob},
                   {"harvest_range", {spec.harvest_lo, spec.harvest_hi}},
                   {"initial_battery", spec.initial_battery}};
    j["censoring"] = {{"censoring", spec.censoring ? "on" : "off"},
                      {"alpha_x", spec.alpha_x},
                      {"eta", spec.eta},
                      {"tau_init", spec.tau_init},
                      {"rho_smoothing", spec.rho_smoothing},
                      {"rho_clamp", {spec.rho_lo, spec.rho_hi}}};
    auto schemes = nlohmann::ordered_json::array();
    for (Scheme s : spec.schemes) schemes.push_back(scheme_token(s));
    j["sim"] = {{"schemes", schemes},
                {"steps", spec.steps},
                {"runs", spec.runs},
                {"seed", spec.seed}};
    return j;
}

} // namespace

void emit_results(const ScenarioSpec& effective,
                  const std::vector<MonteCarloResult>& results,
                  const std::filesystem::path& out_dir) {
    if (results.empty()) {
        fail(ErrorCode::no_data, "no scheme results to emit");
    }

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        fail(ErrorCode::io_error,
             "cannot create output directory " + out_dir.string());
    }

    {
        auto out = open_out(out_dir / "nmsd.csv");
        out << "step,scheme,nmsd_db\n";
        for (const auto& res : results) {
            for (long s = 0; s < res.n_steps; ++s) {
                out << s << ',' << res.scheme << ','
                    << num(res.nmsd_db[static_cast<std::size_t>(s)]) << '\n';
            }
        }
    }

    {
        auto out = open_out(out_dir / "thresholds.csv");
        out << "step,node,tau\n";
        for (const auto& res : results) {
            if (!res.censoring_active) continue;
            for (long s = 0; s < res.n_steps; ++s) {
                for (int k = 0; k < res.n_nodes; ++k) {
                    out << s << ',' << (k + 1) << ','
                        << num(res.mean_tau[static_cast<std::size_t>(k)]
                                           [static_cast<std::size_t>(s)])
                        << '\n';
                }
            }
        }
    }

    {
        auto out = open_out(out_dir / "transmit_rates.csv");
        out << "scheme,node,transmit_rate,stall_rate\n";
        for (const auto& res : results) {
            for (int k = 0; k < res.n_nodes; ++k) {
                out << res.scheme << ',' << (k + 1) << ','
                    << num(res.transmit_rate[static_cast<std::size_t>(k)]) << ','
                    << num(res.stall_rate[static_cast<std::size_t>(k)]) << '\n';
            }
        }
    }

    {
        nlohmann::ordered_json summary;
        summary["config"] = scenario_json(effective);
        auto schemes = nlohmann::ordered_json::array();
        for (const auto& res : results) {
            nlohmann::ordered_json s;
            s["scheme"] = res.scheme;
            s["steady_state_nmsd_db"] = res.steady_state_nmsd_db();
            s["steady_window_steps"] = res.steady_window;
            s["transmit_rates"] = res.transmit_rate;
            s["stall_rates"] = res.stall_rate;
            s["invariant_violations"] = res.invariant_violations;
            schemes.push_back(std::move(s));
        }
        summary["schemes"] = std::move(schemes);
        auto out = open_out(out_dir / "summary.json");
        out << summary.dump(2) << '\n';
    }

    {
        auto out = open_out(out_dir / "effective_scenario.scn");
        out << render_scenario(effective);
    }
}

} // namespace cdatc
