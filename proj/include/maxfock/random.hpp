#pragma once

#include <cstdint>
#include <string>

#include "maxfock/field.hpp"
#include "maxfock/spectral_ops.hpp"

namespace maxfock {

/**
 * Counter-based SplitMix64 stream.
 *
 * Draw i of stream `seed` is mix(seed + (i + 1) * 0x9E3779B97F4A7C15) with
 *   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *   z =  z ^ (z >> 31)
 * Uniforms use the top 53 bits: (u >> 11) * 2^-53. Normals use Box-Muller on two
 * consecutive uniforms, r = sqrt(-2 ln(1 - u1)), returning r cos(2 pi u2) then r sin(2 pi u2).
 */
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    std::uint64_t next_u64() noexcept;
    double uniform() noexcept;
    double normal() noexcept;
    [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

enum class ProfileKind { Flat, Gaussian, Band };

/// Amplitude a(|k|) multiplying the unit complex Gaussian coefficient of each mode.
struct SpectrumProfile {
    ProfileKind kind = ProfileKind::Gaussian;
    double k_scale = 2.0;  ///< Gaussian: a = exp(-|k|^2 / (2 k_scale^2)); Band: a = 1 for |k| <= k_scale
    double k_min = 0.0;    ///< Band only: lower edge

    [[nodiscard]] double amplitude(double k) const noexcept;
    static SpectrumProfile parse(const std::string& text);
};

/// sum over retained (k, s) of a(|k|) (x + i y) phi_{k,s}, x, y ~ N(0, 1/2), drawn in
/// retained_modes order, real part first. Transverse, zero-mean and Nyquist-free.
VectorFieldC random_state(const GridSpec& grid, std::uint64_t seed, const SpectrumProfile& profile = {});

/// Helicity-pure variant: only sigma = s modes are populated.
VectorFieldC random_helicity_state(const GridSpec& grid, std::uint64_t seed, Helicity s,
                                   const SpectrumProfile& profile = {});

/// Real transverse field: real part of random_state.
VectorFieldR random_real_state(const GridSpec& grid, std::uint64_t seed, const SpectrumProfile& profile = {});

} // namespace maxfock
