#pragma once

#include <complex>

namespace maxfock::detail {

/// Unnormalized in-place 3D DFT of an n^3 array holding `howmany` interleaved components
/// (component stride `howmany`, x fastest). sign = -1 forward, +1 backward.
void fft3_inplace(std::complex<double>* data, int n, int howmany, int sign);

} // namespace maxfock::detail
