#pragma once

#include "maxfock/constants.hpp"
#include "maxfock/field.hpp"

namespace maxfock {

/// Epstein zeta sum' |n|^{-s} of the simple cubic lattice, analytically continued (s != 0, 3).
double epstein_zeta_cubic(double s);

enum class PrincipalValueRule {
    OmitSingularCell,    ///< drop x' = x, nothing else
    CurvatureCorrected,  ///< also subtract the h^{3/2} lattice term via a 4th-order stencil Laplacian
};

enum class KernelEvaluation {
    Fft,     ///< zero-padded FFT convolution (same sums, O(N^3 log N))
    Direct,  ///< literal double loop over grid points, O(N^6)
};

struct KernelOptions {
    bool strict_support = false;     ///< throw SupportTooLarge when the support check fails
    double support_tolerance = 1e-4; ///< allowed L2 fraction outside radius L/4, and |mean| fraction
    PrincipalValueRule pv_rule = PrincipalValueRule::OmitSingularCell;
    KernelEvaluation evaluation = KernelEvaluation::Fft;
};

struct SupportReport {
    double outside_fraction;  ///< ||f outside the ball of radius L/4 about the box centre|| / ||f||
    double mean_fraction;     ///< |int f| / int |f|
    bool ok;
};

SupportReport support_report(const VectorFieldC& f, double tolerance = 1e-4);

/**
 * Free-space real-space Omega^{-1/2}:
 *   (pi / sqrt c) int v(x') / (2 pi |x - x'|)^{5/2} d^3x'
 * as a grid-point sum over the box. The singular cell carries the lattice weight
 * -C h^{1/2} Z(5/2), which removes the leading O(h^{1/2}) error of the punctured sum.
 */
VectorFieldC riesz_neg_half(const VectorFieldC& f, const PhysicalConstants& consts,
                            const KernelOptions& options = {});

/**
 * Free-space real-space Omega^{1/2}:
 *   (3 sqrt(2c) / (16 pi^{3/2})) PV int (v(x) - v(x')) / |x - x'|^{7/2} d^3x'
 * The v(x) term is summed over the whole infinite lattice (closed form via Z(7/2));
 * the v(x') term is a grid-point sum over the box with x' = x omitted.
 */
VectorFieldC riesz_pos_half(const VectorFieldC& f, const PhysicalConstants& consts,
                            const KernelOptions& options = {});

/// Gaussian-enveloped test mode x_hat exp(-r^2 / (2 sigma^2)) sin(k0 (x - L/2)), centred in the box.
VectorFieldC gaussian_test_field(const GridSpec& grid, double sigma = 1.2, double k0 = 1.0);

} // namespace maxfock
