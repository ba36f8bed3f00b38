#include "maxfock/fidelity.hpp"

#include <algorithm>
#include <cmath>

#include "maxfock/errors.hpp"
#include "maxfock/spectral_ops.hpp"
#include "maxfock/transforms.hpp"

namespace maxfock {
namespace {

constexpr double kZeroNorm = 1e-14;

double ratio(cplx overlap, double n1, double n2) {
    if (n1 < kZeroNorm || n2 < kZeroNorm) throw ZeroStateFidelity("fidelity of a (numerically) zero state is undefined");
    return std::clamp(std::norm(overlap) / (n1 * n2), 0.0, 1.0);
}

} // namespace

double fidelity_bb(const VectorFieldC& f1, const VectorFieldC& f2, const PhysicalConstants& consts) {
    return ratio(inner_bb(f1, f2, consts), inner_bb(f1, f1, consts).real(), inner_bb(f2, f2, consts).real());
}

double fidelity_m(const ModeAmplitudes& f1, const ModeAmplitudes& f2) {
    return ratio(inner(f1, f2), inner(f1, f1).real(), inner(f2, f2).real());
}

double fidelity_lp(const VectorFieldC& psi1, const VectorFieldC& psi2) {
    return ratio(inner_lp(psi1, psi2), inner_lp(psi1, psi1).real(), inner_lp(psi2, psi2).real());
}

double fidelity_unweighted(const VectorFieldC& f1, const VectorFieldC& f2) { return fidelity_lp(f1, f2); }

ScalarFieldR energy_density(const Bispinor& psi_bb) {
    require_same_grid(psi_bb.upper.grid(), psi_bb.lower.grid(), "energy_density");
    ScalarFieldR out(psi_bb.upper.grid());
    for (std::size_t p = 0; p < out.size(); ++p) out[p] = norm2(psi_bb.upper[p]) + norm2(psi_bb.lower[p]);
    return out;
}

FidelityCounterexample two_frequency_counterexample(const GridSpec& grid) {
    const VectorFieldC a = plane_wave_mode(grid, {1, 0, 0}, Helicity::Plus);
    const VectorFieldC b = plane_wave_mode(grid, {2, 0, 0}, Helicity::Plus);
    return {a + b, a - b};
}

} // namespace maxfock
