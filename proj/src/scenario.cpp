#include "cdatc/scenario.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "cdatc/errors.hpp"
#include "cdatc/signal_model.hpp"

namespace cdatc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

// Raw key/value entries grouped by section, with line numbers for messages.
struct RawEntry {
    std::string value;
    int line = 0;
};
using RawSection = std::map<std::string, RawEntry>;
using RawDoc = std::map<std::string, RawSection>;

RawDoc tokenize(std::string_view text, std::string_view source) {
    RawDoc doc;
    std::string section;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                fail(ErrorCode::parse_error,
                     std::string(source) + ":" + std::to_string(line_no) +
                         ": unterminated section header");
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section.empty()) {
                fail(ErrorCode::parse_error,
                     std::string(source) + ":" + std::to_string(line_no) +
                         ": empty section name");
            }
            doc[section]; // section may be present yet empty
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail(ErrorCode::parse_error,
                 std::string(source) + ":" + std::to_string(line_no) +
                     ": expected key = value");
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (key.empty() || value.empty()) {
            fail(ErrorCode::parse_error,
                 std::string(source) + ":" + std::to_string(line_no) +
                     ": empty key or value");
        }
        if (section.empty()) {
            fail(ErrorCode::parse_error,
                 std::string(source) + ":" + std::to_string(line_no) +
                     ": key outside any [section]");
        }
        if (!doc[section].emplace(key, RawEntry{value, line_no}).second) {
            fail(ErrorCode::parse_error,
                 std::string(source) + ":" + std::to_string(line_no) +
                     ": duplicate key '" + key + "'");
        }
    }
    return doc;
}

[[noreturn]] void bad_key(const std::string& key, const RawEntry& entry,
                          const std::string& why) {
    fail(ErrorCode::validation_error,
         "key '" + key + "' (line " + std::to_string(entry.line) + "): " + why);
}

// Pulls typed values out of one section and tracks which keys were read so
// leftovers can be rejected.
class SectionReader {
public:
    SectionReader(const RawDoc& doc, std::string name)
        : name_(std::move(name)) {
        const auto it = doc.find(name_);
        if (it != doc.end()) section_ = &it->second;
    }

    bool has(const std::string& key) const {
        return section_ && section_->count(key);
    }

    double number(const std::string& key, double fallback) {
        const RawEntry* e = take(key);
        if (!e) return fallback;
        return parse_number(key, *e, e->value);
    }

    long integer(const std::string& key, long fallback) {
        const RawEntry* e = take(key);
        if (!e) return fallback;
        return parse_integer(key, *e, e->value);
    }

    std::uint64_t unsigned_integer(const std::string& key,
                                   std::uint64_t fallback) {
        const RawEntry* e = take(key);
        if (!e) return fallback;
        std::uint64_t out = 0;
        const auto* first = e->value.data();
        const auto* last = first + e->value.size();
        const auto res = std::from_chars(first, last, out);
        if (res.ec != std::errc{} || res.ptr != last) {
            bad_key(key, *e, "expected a non-negative integer, got '" +
                                 e->value + "'");
        }
        return out;
    }

    std::string token(const std::string& key, const std::string& fallback) {
        const RawEntry* e = take(key);
        if (!e) return fallback;
        return e->value;
    }

    std::vector<double> number_list(const std::string& key,
                                    std::vector<double> fallback) {
        const RawEntry* e = take(key);
        if (!e) return fallback;
        std::vector<double> out;
        for (const auto& item : split_list(key, *e)) {
            out.push_back(parse_number(key, *e, item));
        }
        return out;
    }

    std::vector<std::string> token_list(const std::string& key,
                                        std::vector<std::string> fallback) {
        const RawEntry* e = take(key);
        if (!e) return fallback;
        return split_list(key, *e);
    }

    std::vector<std::pair<int, int>> pair_list(const std::string& key) {
        const RawEntry* e = take(key);
        if (!e) return {};
        std::vector<std::pair<int, int>> out;
        for (const auto& item : split_list(key, *e, /*nested=*/true)) {
            const auto comma = item.find(',');
            std::string_view body = item;
            if (body.size() < 2 || body.front() != '[' || body.back() != ']' ||
                comma == std::string::npos) {
                bad_key(key, *e, "expected [i,j] pairs, got '" + item + "'");
            }
            body = body.substr(1, body.size() - 2);
            const auto inner_comma = body.find(',');
            const auto a = std::string(trim(body.substr(0, inner_comma)));
            const auto b = std::string(trim(body.substr(inner_comma + 1)));
            out.emplace_back(
                static_cast<int>(parse_integer(key, *e, a)),
                static_cast<int>(parse_integer(key, *e, b)));
        }
        return out;
    }

    void reject_unknown() const {
        if (!section_) return;
        for (const auto& [key, entry] : *section_) {
            if (!taken_.count(key)) {
                fail(ErrorCode::validation_error,
                     "unknown key '" + key + "' in [" + name_ + "] (line " +
                         std::to_string(entry.line) + ")");
            }
        }
    }

    const RawEntry* take(const std::string& key) {
        if (!section_) return nullptr;
        const auto it = section_->find(key);
        if (it == section_->end()) return nullptr;
        taken_.insert(key);
        return &it->second;
    }

private:
    static double parse_number(const std::string& key, const RawEntry& e,
                               const std::string& text) {
        const char* c_text = text.c_str();
        char* end = nullptr;
        const double v = std::strtod(c_text, &end);
        if (end != c_text + text.size() || text.empty()) {
            bad_key(key, e, "expected a number, got '" + text + "'");
        }
        return v;
    }

    static long parse_integer(const std::string& key, const RawEntry& e,
                              const std::string& text) {
        long out = 0;
        const auto* first = text.data();
        const auto* last = first + text.size();
        const auto res = std::from_chars(first, last, out);
        if (res.ec != std::errc{} || res.ptr != last) {
            bad_key(key, e, "expected an integer, got '" + text + "'");
        }
        return out;
    }

    // Splits "[a, b, c]"; with nested=true items may themselves be bracketed.
    static std::vector<std::string> split_list(const std::string& key,
                                               const RawEntry& e,
                                               bool nested = false) {
        std::string_view body = trim(e.value);
        if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
            bad_key(key, e, "expected a [..] list, got '" + e.value + "'");
        }
        body = body.substr(1, body.size() - 2);
        std::vector<std::string> items;
        int depth = 0;
        std::string current;
        for (char c : body) {
            if (c == '[') ++depth;
            if (c == ']') --depth;
            if (c == ',' && depth == 0) {
                items.emplace_back(trim(current));
                current.clear();
                continue;
            }
            current.push_back(c);
        }
        if (!trim(current).empty()) items.emplace_back(trim(current));
        if (depth != 0) bad_key(key, e, "unbalanced brackets");
        for (const auto& item : items) {
            if (item.empty()) bad_key(key, e, "empty list item");
            if (!nested && item.find('[') != std::string::npos) {
                bad_key(key, e, "unexpected nested list");
            }
        }
        return items;
    }

    std::string name_;
    const RawSection* section_ = nullptr;
    std::set<std::string> taken_;
};

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

const char* combiner_token(CombinerRule rule) {
    switch (rule) {
    case CombinerRule::uniform: return "uniform";
    case CombinerRule::metropolis: return "metropolis";
    case CombinerRule::adaptive_ls: return "adaptive-ls";
    }
    return "?";
}

ScenarioSpec parse_scenario_text(std::string_view text,
                                 std::string_view source_name) {
    const RawDoc doc = tokenize(text, source_name);
    static const std::set<std::string> known_sections = {
        "network", "signal", "diffusion", "energy", "censoring", "sim"};
    for (const auto& [section, entries] : doc) {
        if (!known_sections.count(section)) {
            fail(ErrorCode::validation_error,
                 "unknown section [" + section + "]");
        }
        (void)entries;
    }

    ScenarioSpec spec;

    SectionReader network(doc, "network");
    if (!network.has("nodes")) {
        fail(ErrorCode::validation_error, "missing required key 'nodes'");
    }
    spec.nodes = static_cast<int>(network.integer("nodes", 0));
    if (!network.has("edges")) {
        fail(ErrorCode::validation_error, "missing required key 'edges'");
    }
    spec.edges = network.pair_list("edges");
    network.reject_unknown();

    SectionReader signal(doc, "signal");
    spec.taps = static_cast<int>(signal.integer("taps", spec.taps));
    spec.signal_power = signal.number("signal_power", spec.signal_power);
    if (signal.has("noise_variances")) {
        spec.noise_variances = signal.number_list("noise_variances", {});
    } else if (spec.nodes == 7) {
        spec.noise_variances = default_noise_profile();
    } else {
        fail(ErrorCode::validation_error,
             "missing required key 'noise_variances' (defaults exist only "
             "for the 7-node scenario)");
    }
    signal.reject_unknown();

    SectionReader diffusion(doc, "diffusion");
    spec.mu = diffusion.number("mu", spec.mu);
    spec.delta = diffusion.number("delta", spec.delta);
    const std::string comb = diffusion.token("combiner", combiner_token(spec.combiner));
    if (comb == "uniform") {
        spec.combiner = CombinerRule::uniform;
    } else if (comb == "metropolis") {
        spec.combiner = CombinerRule::metropolis;
    } else if (comb == "adaptive-ls") {
        spec.combiner = CombinerRule::adaptive_ls;
    } else {
        fail(ErrorCode::validation_error,
             "key 'combiner': expected uniform|metropolis|adaptive-ls, got '" +
                 comb + "'");
    }
    diffusion.reject_unknown();

    SectionReader energy(doc, "energy");
    spec.battery = energy.number("battery", spec.battery);
    spec.sense_cost = energy.number("sense_cost", spec.sense_cost);
    spec.tx_cost = energy.number("tx_cost", spec.tx_cost);
    spec.harvest_prob = energy.number("harvest_prob", spec.harvest_prob);
    const auto range =
        energy.number_list("harvest_range", {spec.harvest_lo, spec.harvest_hi});
    if (range.size() != 2) {
        fail(ErrorCode::validation_error,
             "key 'harvest_range': expected [lo, hi]");
    }
    spec.harvest_lo = range[0];
    spec.harvest_hi = range[1];
    spec.initial_battery = energy.number("initial_battery", spec.battery);
    energy.reject_unknown();

    SectionReader censoring(doc, "censoring");
    const std::string toggle = censoring.token("censoring", spec.censoring ? "on" : "off");
    if (toggle == "on") {
        spec.censoring = true;
    } else if (toggle == "off") {
        spec.censoring = false;
    } else {
        fail(ErrorCode::validation_error,
             "key 'censoring': expected on|off, got '" + toggle + "'");
    }
    spec.alpha_x = censoring.number("alpha_x", spec.alpha_x);
    spec.eta = censoring.number("eta", spec.eta);
    spec.tau_init = censoring.number("tau_init", spec.tau_init);
    spec.rho_smoothing = censoring.number("rho_smoothing", spec.rho_smoothing);
    const auto clamp = censoring.number_list("rho_clamp", {spec.rho_lo, spec.rho_hi});
    if (clamp.size() != 2) {
        fail(ErrorCode::validation_error, "key 'rho_clamp': expected [lo, hi]");
    }
    spec.rho_lo = clamp[0];
    spec.rho_hi = clamp[1];
    censoring.reject_unknown();

    SectionReader sim(doc, "sim");
    const auto tokens =
        sim.token_list("schemes", {scheme_token(Scheme::cd_atc)});
    spec.schemes.clear();
    for (const auto& t : tokens) {
        const auto s = scheme_from_token(t);
        if (!s) {
            fail(ErrorCode::validation_error,
                 "key 'schemes': unknown scheme '" + t + "'");
        }
        spec.schemes.push_back(*s);
    }
    if (spec.schemes.empty()) {
        fail(ErrorCode::validation_error, "key 'schemes': list is empty");
    }
    spec.steps = sim.integer("steps", spec.steps);
    spec.runs = sim.integer("runs", spec.runs);
    spec.seed = sim.unsigned_integer("seed", spec.seed);
    sim.reject_unknown();

    // Whole-config validation (ranges, topology, connectivity). Range
    // violations surface as scenario validation errors; topology errors
    // keep their own codes.
    try {
        validate_config(build_config(spec, spec.schemes.front()));
    } catch (const SimError& e) {
        if (e.code() == ErrorCode::config_invalid) {
            fail(ErrorCode::validation_error, e.message());
        }
        throw;
    }
    return spec;
}

ScenarioSpec parse_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorCode::io_error, "cannot open scenario file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_text(buffer.str(), path.string());
}

std::string render_scenario(const ScenarioSpec& spec) {
    std::ostringstream out;
    out << "[network]\n";
    out << "nodes = " << spec.nodes << "\n";
    out << "edges = [";
    for (std::size_t i = 0; i < spec.edges.size(); ++i) {
        if (i) out << ",";
        out << "[" << spec.edges[i].first << "," << spec.edges[i].second << "]";
    }
    out << "]\n\n";

    out << "[signal]\n";
    out << "taps = " << spec.taps << "\n";
    out << "signal_power = " << format_number(spec.signal_power) << "\n";
    out << "noise_variances = [";
    for (std::size_t i = 0; i < spec.noise_variances.size(); ++i) {
        if (i) out << ",";
        out << format_number(spec.noise_variances[i]);
    }
    out << "]\n\n";

    out << "[diffusion]\n";
    out << "mu = " << format_number(spec.mu) << "\n";
    out << "delta = " << format_number(spec.delta) << "\n";
    out << "combiner = " << combiner_token(spec.combiner) << "\n\n";

    out << "[energy]\n";
    out << "battery = " << format_number(spec.battery) << "\n";
    out << "sense_cost = " << format_number(spec.sense_cost) << "\n";
    out << "tx_cost = " << format_number(spec.tx_cost) << "\n";
    out << "harvest_prob = " << format_number(spec.harvest_prob) << "\n";
    out << "harvest_range = [" << format_number(spec.harvest_lo) << ","
        << format_number(spec.harvest_hi) << "]\n";
    out << "initial_battery = " << format_number(spec.initial_battery) << "\n\n";

    out << "[censoring]\n";
    out << "censoring = " << (spec.censoring ? "on" : "off") << "\n";
    out << "alpha_x = " << format_number(spec.alpha_x) << "\n";
    out << "eta = " << format_number(spec.eta) << "\n";
    out << "tau_init = " << format_number(spec.tau_init) << "\n";
    out << "rho_smoothing = " << format_number(spec.rho_smoothing) << "\n";
    out << "rho_clamp = [" << format_number(spec.rho_lo) << ","
        << format_number(spec.rho_hi) << "]\n\n";

    out << "[sim]\n";
    out << "schemes = [";
    for (std::size_t i = 0; i < spec.schemes.size(); ++i) {
        if (i) out << ",";
        out << scheme_token(spec.schemes[i]);
    }
    out << "]\n";
    out << "steps = " << spec.steps << "\n";
    out << "runs = " << spec.runs << "\n";
    out << "seed = " << spec.seed << "\n";
    return out.str();
}

SimConfig build_config(const ScenarioSpec& spec, Scheme scheme) {
    std::vector<std::pair<int, int>> edges0;
    edges0.reserve(spec.edges.size());
    for (const auto& [a, b] : spec.edges) {
        edges0.emplace_back(a - 1, b - 1); // 1-based labels in files
    }

    SimConfig config;
    config.topology = Topology(spec.nodes, edges0);
    config.signal.taps = spec.taps;
    config.signal.signal_power = spec.signal_power;
    config.signal.noise_variances = spec.noise_variances;
    config.diffusion.mu = spec.mu;
    config.diffusion.delta = spec.delta;
    config.diffusion.combiner = spec.combiner;
    config.energy.capacity = spec.battery;
    config.energy.sense_cost = spec.sense_cost;
    config.energy.tx_cost = spec.tx_cost;
    config.energy.harvest_prob = spec.harvest_prob;
    config.energy.harvest_min = spec.harvest_lo;
    config.energy.harvest_max = spec.harvest_hi;
    config.energy.initial_level = spec.initial_battery;
    config.censoring.enabled = spec.censoring;
    config.censoring.alpha_x = spec.alpha_x;
    config.censoring.eta = spec.eta;
    config.censoring.tau_init = spec.tau_init;
    config.censoring.rho_smoothing = spec.rho_smoothing;
    config.censoring.rho_lo = spec.rho_lo;
    config.censoring.rho_hi = spec.rho_hi;
    config.scheme = scheme;
    config.n_steps = spec.steps;
    config.runs = spec.runs;
    config.seed = spec.seed;
    return config;
}

} // namespace cdatc
