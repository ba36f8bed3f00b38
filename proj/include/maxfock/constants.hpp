#pragma once

namespace maxfock {

/// hbar, eps0 and c. mu0 is derived so that mu0 * eps0 * c^2 == 1.
struct PhysicalConstants {
    double hbar = 1.0;
    double eps0 = 1.0;
    double c = 1.0;

    [[nodiscard]] double mu0() const noexcept { return 1.0 / (eps0 * c * c); }

    /// hbar = eps0 = c = 1.
    static PhysicalConstants natural() noexcept { return {}; }

    /// CODATA 2018 values in SI units.
    static PhysicalConstants si() noexcept {
        return {1.054571817e-34, 8.8541878128e-12, 299792458.0};
    }

    /// Throws std::invalid_argument unless every constant is finite and strictly positive.
    void validate() const;

    friend bool operator==(const PhysicalConstants&, const PhysicalConstants&) = default;
};

} // namespace maxfock
