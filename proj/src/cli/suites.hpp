#pragma once

#include <maxfock/constants.hpp>
#include <maxfock/grid.hpp>

#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace maxfock::cli {

enum class Bound {
    AtMost,   ///< value <= tolerance
    AtLeast,  ///< value >= tolerance
    Below,    ///< value < tolerance
    Above,    ///< value > tolerance
};

struct Check {
    std::string name;
    double value;
    double tolerance;
    Bound bound;
    bool pass;
};

/// Ordered list of named checks; serializes to {name: {value, tolerance, pass}}.
class Report {
public:
    explicit Report(std::ostream* log = nullptr) : log_(log) {}
    const Check& add(std::string name, double value, double tolerance, Bound bound = Bound::AtMost);
    [[nodiscard]] const std::vector<Check>& checks() const noexcept { return checks_; }
    [[nodiscard]] bool all_pass() const;
    [[nodiscard]] std::size_t failures() const;
    [[nodiscard]] nlohmann::json to_json() const;

private:
    std::ostream* log_;
    std::vector<Check> checks_;
};

struct SuiteContext {
    GridSpec grid;
    PhysicalConstants constants;
    std::uint64_t seed;
    int samples;
    GridSpec kernel_grid;  ///< coarsest kernel level
    int kernel_levels;
};

[[nodiscard]] const std::vector<std::string>& suite_names();
[[nodiscard]] bool is_suite(const std::string& name);

/// Runs one named suite ("all" runs every suite in order) and appends its checks.
void run_suite(const std::string& name, const SuiteContext& ctx, Report& report);

/// Kernel-vs-spectral relative errors for one refinement level.
struct KernelLevel {
    double L;
    int N;
    double neg_half;
    double pos_half;
    double pos_half_corrected;
    double composition;
};
/// Level i uses (2^i L, 2^i N) starting from `coarsest`.
std::vector<KernelLevel> kernel_levels(const GridSpec& coarsest, int levels, const PhysicalConstants& consts);
void add_kernel_checks(const std::vector<KernelLevel>& levels, Report& report);

} // namespace maxfock::cli
