#include "maxfock/transforms.hpp"

#include <cmath>

#include "fft.hpp"

namespace maxfock {

SpectralField to_spectral(const VectorFieldC& f) {
    const auto& g = f.grid();
    SpectralField out(g);
    std::copy(f.begin(), f.end(), out.values().begin());
    detail::fft3_inplace(out.values().data()->c.data(), g.points_per_axis(), 3, -1);
    const double norm = 1.0 / static_cast<double>(g.size());
    for (auto& v : out.values()) v *= cplx(norm);
    return out;
}

SpectralField to_spectral(const VectorFieldR& f) { return to_spectral(to_complex(f)); }

VectorFieldC from_spectral(const SpectralField& F) {
    const auto& g = F.grid();
    VectorFieldC out(g);
    std::copy(F.values().begin(), F.values().end(), out.begin());
    detail::fft3_inplace(out.data(), g.points_per_axis(), 3, +1);
    return out;
}

ScalarFieldC scalar_to_spectral(const ScalarFieldC& f) {
    const auto& g = f.grid();
    ScalarFieldC out = f;
    detail::fft3_inplace(out.values().data(), g.points_per_axis(), 1, -1);
    const double norm = 1.0 / static_cast<double>(g.size());
    for (auto& v : out.values()) v *= norm;
    return out;
}

ScalarFieldC scalar_from_spectral(const ScalarFieldC& F) {
    ScalarFieldC out = F;
    detail::fft3_inplace(out.values().data(), F.grid().points_per_axis(), 1, +1);
    return out;
}

cplx inner_lp(const VectorFieldC& f, const VectorFieldC& g) {
    require_same_grid(f.grid(), g.grid(), "inner_lp");
    cplx s = 0.0;
    for (std::size_t p = 0; p < f.size(); ++p) s += cdot(f[p], g[p]);
    return s * f.grid().cell_volume();
}

double inner_lp(const VectorFieldR& f, const VectorFieldR& g) {
    require_same_grid(f.grid(), g.grid(), "inner_lp");
    double s = 0.0;
    for (std::size_t p = 0; p < f.size(); ++p) s += dot(f[p], g[p]);
    return s * f.grid().cell_volume();
}

cplx inner_lp(const ScalarFieldC& f, const ScalarFieldC& g) {
    require_same_grid(f.grid(), g.grid(), "inner_lp");
    cplx s = 0.0;
    for (std::size_t p = 0; p < f.size(); ++p) s += std::conj(f[p]) * g[p];
    return s * f.grid().cell_volume();
}

cplx inner_spectral(const SpectralField& F, const SpectralField& G) {
    require_same_grid(F.grid(), G.grid(), "inner_spectral");
    cplx s = 0.0;
    for (std::size_t p = 0; p < F.size(); ++p) s += cdot(F[p], G[p]);
    return s * F.grid().volume();
}

double norm_lp(const VectorFieldC& f) { return std::sqrt(inner_lp(f, f).real()); }
double norm_lp(const VectorFieldR& f) { return std::sqrt(inner_lp(f, f)); }

double relative_error(const VectorFieldC& f, const VectorFieldC& g) {
    const double d = norm_lp(f - g);
    const double r = norm_lp(g);
    return r > 0.0 ? d / r : d;
}

double relative_error(const VectorFieldR& f, const VectorFieldR& g) {
    const double d = norm_lp(f - g);
    const double r = norm_lp(g);
    return r > 0.0 ? d / r : d;
}

double integrate(const ScalarFieldR& f) {
    double s = 0.0;
    for (double v : f.values()) s += v;
    return s * f.grid().cell_volume();
}

} // namespace maxfock
