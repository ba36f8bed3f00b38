#pragma once

#include "maxfock/field.hpp"

namespace maxfock {

/// Forward transform, F(k) = N^-3 sum_x f(x) exp(-i k.x).
SpectralField to_spectral(const VectorFieldC& f);
SpectralField to_spectral(const VectorFieldR& f);
/// Inverse of to_spectral.
VectorFieldC from_spectral(const SpectralField& F);

ScalarFieldC scalar_to_spectral(const ScalarFieldC& f);
ScalarFieldC scalar_from_spectral(const ScalarFieldC& F);

/// <f|g>_LP = cell_volume * sum_x f*(x) . g(x).
cplx inner_lp(const VectorFieldC& f, const VectorFieldC& g);
double inner_lp(const VectorFieldR& f, const VectorFieldR& g);
cplx inner_lp(const ScalarFieldC& f, const ScalarFieldC& g);

/// Same product evaluated on the spectral side: L^3 sum_k F*(k) . G(k).
cplx inner_spectral(const SpectralField& F, const SpectralField& G);

double norm_lp(const VectorFieldC& f);
double norm_lp(const VectorFieldR& f);

/// ||f - g||_LP / ||g||_LP (absolute error when g == 0).
double relative_error(const VectorFieldC& f, const VectorFieldC& g);
double relative_error(const VectorFieldR& f, const VectorFieldR& g);

/// Cell-volume weighted sum of a scalar field.
double integrate(const ScalarFieldR& f);

} // namespace maxfock
