#pragma once

#include <array>
#include <functional>

#include "maxfock/constants.hpp"
#include "maxfock/field.hpp"

namespace maxfock {

enum class Helicity : int { Plus = 1, Minus = -1 };

[[nodiscard]] constexpr int sign(Helicity h) noexcept { return static_cast<int>(h); }

/// Spin-1 matrices (S^j)_{kl} = -i eps_{jkl}, so that curl = -i (S . grad).
using Matrix3c = std::array<std::array<cplx, 3>, 3>;
[[nodiscard]] const std::array<Matrix3c, 3>& spin_matrices() noexcept;

struct PolarizationPair {
    Vec3d k;
    Vec3c eps_plus;
    Vec3c eps_minus;
};

/**
 * Circular polarization vectors for k != 0.
 *
 * Off the k_z axis the closed form
 *   eps_+ = (-kx kz + i|k| ky, -ky kz - i|k| kx, kx^2 + ky^2) / (sqrt2 |k| sqrt(kx^2+ky^2))
 * is used verbatim. On the axis eps_+ = (1, i sgn(kz), 0)/sqrt2. Always eps_- = conj(eps_+)
 * and i k x eps_s = s |k| eps_s.
 */
[[nodiscard]] PolarizationPair polarization(const Vec3d& k);

[[nodiscard]] inline const Vec3c& polarization_vector(const PolarizationPair& p, Helicity s) noexcept {
    return s == Helicity::Plus ? p.eps_plus : p.eps_minus;
}

// Every operator below acts diagonally in the plane-wave basis. Nyquist planes are
// mapped to zero.

VectorFieldC curl(const VectorFieldC& f);
VectorFieldR curl(const VectorFieldR& f);

ScalarFieldC divergence(const VectorFieldC& f);
ScalarFieldC divergence(const VectorFieldR& f);

VectorFieldC gradient(const ScalarFieldC& g);
ScalarFieldC laplacian(const ScalarFieldC& g);

/// Multiplication by (c|k|)^alpha, alpha in [-2, 2]. alpha == 0 returns f unchanged.
/// Throws NegativePowerOnZeroMode when alpha < 0 and the k=0 amplitude exceeds 1e-14 ||f||.
VectorFieldC omega_pow(const VectorFieldC& f, double alpha, const PhysicalConstants& consts);
VectorFieldR omega_pow(const VectorFieldR& f, double alpha, const PhysicalConstants& consts);

/// Lambda = (-Delta)^{-1/2} curl, symbol i k x / |k|.
VectorFieldC helicity(const VectorFieldC& f);
VectorFieldR helicity(const VectorFieldR& f);

/// (1 - k k^T / |k|^2); the k=0 mode is set to zero.
VectorFieldC project_transverse(const VectorFieldC& f);
VectorFieldR project_transverse(const VectorFieldR& f);

/// (1 + s Lambda) / 2. With transverse_first the transverse projection is applied first.
VectorFieldC project_helicity(const VectorFieldC& f, Helicity s, bool transverse_first = false);
VectorFieldR project_helicity(const VectorFieldR& f, Helicity s, bool transverse_first = false);

/// Normalized discrete mode V^{-1/2} eps_s(k) exp(i k.x).
/// Throws ZeroModeRequest for n == 0 and NyquistRequest when some |n_j| >= N/2.
VectorFieldC plane_wave_mode(const GridSpec& grid, const KIndex& n, Helicity s);

/// Relative size of the k=0 component, |F(0)| sqrt(V) / ||f||_LP (0 for the zero field).
double zero_mode_fraction(const VectorFieldC& f);

/// Throws NegativePowerOnZeroMode if zero_mode_fraction(f) > 1e-14.
void require_no_zero_mode(const VectorFieldC& f, const char* context);

/// Per-mode symbol application: out(k) = symbol(wavevector, F(k)). The symbol is
/// never called on Nyquist slots, which are zeroed.
using SpectralSymbol = std::function<Vec3c(const Wavevector&, const Vec3c&)>;
VectorFieldC apply_symbol(const VectorFieldC& f, const SpectralSymbol& symbol);

} // namespace maxfock
