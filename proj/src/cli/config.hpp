#pragma once

#include <maxfock/constants.hpp>
#include <maxfock/dynamics.hpp>
#include <maxfock/grid.hpp>
#include <maxfock/kernels.hpp>
#include <maxfock/maps.hpp>

#include <cstdint>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxfock::cli {

enum class Scenario { Verify, Evolve, Fidelity, KernelCheck, Spectrum };

/**
 * Everything one CLI run needs. Filled from defaults, then a config file, then flags.
 *
 * Config files are `key = value` lines; `#` starts a comment. Keys are listed in
 * config_keys().
 */
struct RunConfig {
    Scenario scenario = Scenario::Verify;
    double L = 6.283185307179586;
    int N = 16;
    PhysicalConstants constants{};
    std::uint64_t seed = 0;
    std::filesystem::path output = "maxfock_out";

    // verify
    std::string suite = "all";
    int samples = 20;

    // evolve
    int modes = 3;  ///< lowest modes populated; 0 means a full random field shaped by `profile`
    int steps = 100;
    double dt = 0.0;  ///< 0 picks 2 pi / (64 w_max)
    RunRepresentation representation = RunRepresentation::BB;
    int snapshot_every = 10;
    std::string profile = "gaussian:2";

    // fidelity
    std::filesystem::path snapshot_a;
    std::filesystem::path snapshot_b;

    // kernel-check
    double kernel_L = 25.132741228718345;
    int kernel_N = 32;
    int levels = 3;

    // spectrum
    std::filesystem::path input;
    AmplitudeKind amplitudes = AmplitudeKind::BbMomentum;
};

/// A bad key, value or combination. line is 0 for flags and cross-key validation.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string source, int line, std::string key, const std::string& message);
    [[nodiscard]] const std::string& source() const noexcept { return source_; }
    [[nodiscard]] int line() const noexcept { return line_; }
    [[nodiscard]] const std::string& key() const noexcept { return key_; }

private:
    std::string source_;
    int line_;
    std::string key_;
};

[[nodiscard]] const std::vector<std::string>& config_keys();

/// Sets one key from its text value; throws ConfigError tagged with source and line.
void set_value(RunConfig& config, const std::string& key, const std::string& value,
               const std::string& source = "flag", int line = 0);

/// Applies every line of a config file on top of `config`.
void read_config(std::istream& is, RunConfig& config, const std::string& source);
void read_config(const std::filesystem::path& path, RunConfig& config);

/// Cross-key checks (grid validity, positive counts, scenario inputs).
void validate(const RunConfig& config);

/// Accepts plain numbers and multiples of pi: "6.28", "pi", "8pi", "8*pi", "0.5pi".
double parse_length(const std::string& text);

Scenario parse_scenario(const std::string& text);
[[nodiscard]] std::string scenario_name(Scenario s);
RunRepresentation parse_representation(const std::string& text);
[[nodiscard]] std::string representation_name(RunRepresentation r);
AmplitudeKind parse_amplitude_kind(const std::string& text);

} // namespace maxfock::cli
