#include "cli/config.hpp"

#include <maxfock/random.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>

namespace maxfock::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return s;
}

double to_double(const std::string& text) {
    double v = 0.0;
    const auto* first = text.data();
    const auto* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) throw std::invalid_argument("expected a number, got '" + text + "'");
    return v;
}

long long to_integer(const std::string& text) {
    long long v = 0;
    const auto* first = text.data();
    const auto* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw std::invalid_argument("expected an integer, got '" + text + "'");
    return v;
}

int to_int(const std::string& text, int lo) {
    const long long v = to_integer(text);
    if (v < lo || v > 1'000'000'000) throw std::invalid_argument("value " + text + " out of range (minimum " + std::to_string(lo) + ")");
    return static_cast<int>(v);
}

double positive(const std::string& text) {
    const double v = to_double(text);
    if (!(v > 0.0)) throw std::invalid_argument("must be positive, got '" + text + "'");
    return v;
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"scenario", [](RunConfig& c, const std::string& v) { c.scenario = parse_scenario(v); }},
        {"L", [](RunConfig& c, const std::string& v) { c.L = parse_length(v); }},
        {"N", [](RunConfig& c, const std::string& v) { c.N = to_int(v, 4); }},
        {"constants", [](RunConfig& c, const std::string& v) {
             const auto s = lower(v);
             if (s == "natural") c.constants = PhysicalConstants::natural();
             else if (s == "si") c.constants = PhysicalConstants::si();
             else throw std::invalid_argument("expected natural or si, got '" + v + "'");
         }},
        {"hbar", [](RunConfig& c, const std::string& v) { c.constants.hbar = positive(v); }},
        {"eps0", [](RunConfig& c, const std::string& v) { c.constants.eps0 = positive(v); }},
        {"c", [](RunConfig& c, const std::string& v) { c.constants.c = positive(v); }},
        {"seed", [](RunConfig& c, const std::string& v) {
             const long long s = to_integer(v);
             if (s < 0) throw std::invalid_argument("seed must be non-negative");
             c.seed = static_cast<std::uint64_t>(s);
         }},
        {"output", [](RunConfig& c, const std::string& v) { c.output = v; }},
        {"suite", [](RunConfig& c, const std::string& v) { c.suite = v; }},
        {"samples", [](RunConfig& c, const std::string& v) { c.samples = to_int(v, 1); }},
        {"modes", [](RunConfig& c, const std::string& v) { c.modes = to_int(v, 0); }},
        {"steps", [](RunConfig& c, const std::string& v) { c.steps = to_int(v, 2); }},
        {"dt", [](RunConfig& c, const std::string& v) {
             c.dt = to_double(v);
             if (c.dt < 0.0) throw std::invalid_argument("dt must be >= 0");
         }},
        {"representation", [](RunConfig& c, const std::string& v) { c.representation = parse_representation(v); }},
        {"snapshot_every", [](RunConfig& c, const std::string& v) { c.snapshot_every = to_int(v, 0); }},
        {"profile", [](RunConfig& c, const std::string& v) {
             (void)SpectrumProfile::parse(v);
             c.profile = v;
         }},
        {"snapshot_a", [](RunConfig& c, const std::string& v) { c.snapshot_a = v; }},
        {"snapshot_b", [](RunConfig& c, const std::string& v) { c.snapshot_b = v; }},
        {"kernel_L", [](RunConfig& c, const std::string& v) { c.kernel_L = parse_length(v); }},
        {"kernel_N", [](RunConfig& c, const std::string& v) { c.kernel_N = to_int(v, 4); }},
        {"levels", [](RunConfig& c, const std::string& v) { c.levels = to_int(v, 1); }},
        {"input", [](RunConfig& c, const std::string& v) { c.input = v; }},
        {"amplitudes", [](RunConfig& c, const std::string& v) { c.amplitudes = parse_amplitude_kind(v); }},
    };
    return table;
}

} // namespace

ConfigError::ConfigError(std::string source, int line, std::string key, const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) +
                         (key.empty() ? std::string() : ": key '" + key + "'") + ": " + message),
      source_(std::move(source)), line_(line), key_(std::move(key)) {}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& [name, _] : setters()) k.push_back(name);
        return k;
    }();
    return keys;
}

void set_value(RunConfig& config, const std::string& key, const std::string& value, const std::string& source,
               int line) {
    const auto& table = setters();
    const auto it = table.find(key);
    if (it == table.end()) throw ConfigError(source, line, key, "unknown key");
    if (value.empty()) throw ConfigError(source, line, key, "missing value");
    try {
        it->second(config, value);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(source, line, key, e.what());
    }
}

void read_config(std::istream& is, RunConfig& config, const std::string& source) {
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw ConfigError(source, line, "", "expected 'key = value', got '" + text + "'");
        const std::string key = trim(text.substr(0, eq));
        if (key.empty()) throw ConfigError(source, line, "", "empty key");
        set_value(config, key, trim(text.substr(eq + 1)), source, line);
    }
}

void read_config(const std::filesystem::path& path, RunConfig& config) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path.string(), 0, "", "cannot open config file");
    read_config(in, config, path.string());
}

void validate(const RunConfig& config) {
    try {
        GridSpec(config.L, config.N);
        GridSpec(config.kernel_L, config.kernel_N);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("config", 0, "N", e.what());
    }
    try {
        config.constants.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("config", 0, "constants", e.what());
    }
    if (config.scenario == Scenario::Evolve) {
        const std::size_t retained = 2 * (static_cast<std::size_t>(config.N - 1) * (config.N - 1) * (config.N - 1) - 1);
        if (static_cast<std::size_t>(config.modes) > retained)
            throw ConfigError("config", 0, "modes", "grid retains only " + std::to_string(retained) + " modes");
    }
    if (config.scenario == Scenario::Fidelity && (config.snapshot_a.empty() || config.snapshot_b.empty()))
        throw ConfigError("config", 0, "snapshot_a", "fidelity needs two snapshot files");
}

double parse_length(const std::string& text) {
    std::string s = lower(trim(text));
    double factor = 1.0;
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
        factor = std::numbers::pi;
        s.resize(s.size() - 2);
        if (!s.empty() && s.back() == '*') s.pop_back();
        if (s.empty()) s = "1";
    }
    const double v = to_double(s) * factor;
    if (!(v > 0.0)) throw std::invalid_argument("length must be positive, got '" + text + "'");
    return v;
}

Scenario parse_scenario(const std::string& text) {
    const auto s = lower(text);
    if (s == "verify") return Scenario::Verify;
    if (s == "evolve") return Scenario::Evolve;
    if (s == "fidelity") return Scenario::Fidelity;
    if (s == "kernel-check") return Scenario::KernelCheck;
    if (s == "spectrum") return Scenario::Spectrum;
    throw std::invalid_argument("unknown scenario '" + text + "'");
}

std::string scenario_name(Scenario s) {
    switch (s) {
    case Scenario::Verify: return "verify";
    case Scenario::Evolve: return "evolve";
    case Scenario::Fidelity: return "fidelity";
    case Scenario::KernelCheck: return "kernel-check";
    case Scenario::Spectrum: return "spectrum";
    }
    return "?";
}

RunRepresentation parse_representation(const std::string& text) {
    const auto s = lower(text);
    if (s == "lp") return RunRepresentation::LP;
    if (s == "rs") return RunRepresentation::RS;
    if (s == "bb") return RunRepresentation::BB;
    if (s == "fields") return RunRepresentation::Fields;
    throw std::invalid_argument("expected lp, rs, bb or fields, got '" + text + "'");
}

std::string representation_name(RunRepresentation r) {
    switch (r) {
    case RunRepresentation::LP: return "LP";
    case RunRepresentation::RS: return "RS";
    case RunRepresentation::BB: return "BB";
    case RunRepresentation::Fields: return "fields";
    }
    return "?";
}

AmplitudeKind parse_amplitude_kind(const std::string& text) {
    const auto s = lower(text);
    if (s == "momentum") return AmplitudeKind::Momentum;
    if (s == "rs") return AmplitudeKind::Rs;
    if (s == "bb-basis") return AmplitudeKind::BbBasis;
    if (s == "bb-momentum") return AmplitudeKind::BbMomentum;
    throw std::invalid_argument("expected momentum, rs, bb-basis or bb-momentum, got '" + text + "'");
}

} // namespace maxfock::cli
