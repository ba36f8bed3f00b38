#pragma once

#include <array>
#include <cstddef>
#include <numbers>

#include "maxfock/vec3.hpp"

namespace maxfock {

/// Signed lattice index n of a wavevector k = (2 pi / L) n, each n_j in [-N/2, N/2).
using KIndex = std::array<int, 3>;

/// One entry of the discrete wavevector lattice, addressed by its FFT storage slot.
struct Wavevector {
    KIndex n{};
    Vec3d k{};
    double magnitude = 0.0;
    bool zero = false;
    bool nyquist = false;  ///< some n_j == -N/2; these planes are always zeroed
};

/**
 * Periodic cubic box [0, L)^3 sampled on N^3 points.
 *
 * Storage order everywhere is x-fastest: point (i, j, l) lives at i + N (j + N l).
 * Spectral coefficients use the same order with FFT index m_j, where
 * n_j = m_j for m_j < N/2 and n_j = m_j - N otherwise.
 */
class GridSpec {
public:
    /// Throws std::invalid_argument unless L > 0 and N is even and >= 4.
    GridSpec(double box_length, int points_per_axis);

    [[nodiscard]] double box_length() const noexcept { return length_; }
    [[nodiscard]] int points_per_axis() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept {
        return static_cast<std::size_t>(n_) * n_ * n_;
    }
    [[nodiscard]] double spacing() const noexcept { return length_ / n_; }
    [[nodiscard]] double cell_volume() const noexcept {
        const double h = spacing();
        return h * h * h;
    }
    [[nodiscard]] double volume() const noexcept { return length_ * length_ * length_; }
    /// Lattice spacing 2 pi / L in k-space.
    [[nodiscard]] double dk() const noexcept { return 2.0 * std::numbers::pi / length_; }

    [[nodiscard]] std::size_t index(int i, int j, int l) const noexcept {
        return static_cast<std::size_t>(i) + static_cast<std::size_t>(n_) * (j + static_cast<std::size_t>(n_) * l);
    }
    [[nodiscard]] std::array<int, 3> coords(std::size_t p) const noexcept {
        const auto n = static_cast<std::size_t>(n_);
        return {static_cast<int>(p % n), static_cast<int>((p / n) % n), static_cast<int>(p / (n * n))};
    }
    [[nodiscard]] Vec3d position(std::size_t p) const noexcept {
        const auto ijk = coords(p);
        const double h = spacing();
        return {{ijk[0] * h, ijk[1] * h, ijk[2] * h}};
    }

    [[nodiscard]] int signed_index(int m) const noexcept { return m < n_ / 2 ? m : m - n_; }
    [[nodiscard]] int storage_index(int n) const noexcept { return n >= 0 ? n : n + n_; }

    /// Wavevector stored at spectral slot p.
    [[nodiscard]] Wavevector wavevector(std::size_t p) const noexcept;
    [[nodiscard]] std::size_t spectral_slot(const KIndex& n) const noexcept {
        return index(storage_index(n[0]), storage_index(n[1]), storage_index(n[2]));
    }
    /// True when every n_j lies in (-N/2, N/2).
    [[nodiscard]] bool in_range(const KIndex& n) const noexcept;
    [[nodiscard]] bool is_nyquist(const KIndex& n) const noexcept;
    [[nodiscard]] Vec3d k_vector(const KIndex& n) const noexcept {
        const double d = dk();
        return {{n[0] * d, n[1] * d, n[2] * d}};
    }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    double length_;
    int n_;
};

/// Same as the GridSpec constructor; kept as a named factory.
inline GridSpec make_grid(double box_length, int points_per_axis) {
    return GridSpec(box_length, points_per_axis);
}

/// Throws GridMismatch when a != b.
void require_same_grid(const GridSpec& a, const GridSpec& b, const char* context);

} // namespace maxfock
