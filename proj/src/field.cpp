#include "maxfock/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "maxfock/errors.hpp"

namespace maxfock {

template <class T>
VectorField<T>::VectorField(GridSpec grid, std::vector<value_type> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
        throw std::invalid_argument("field size does not match grid");
    }
}

template <class T>
VectorField<T>& VectorField<T>::operator+=(const VectorField& o) {
    require_same_grid(grid_, o.grid_, "field addition");
    for (std::size_t p = 0; p < values_.size(); ++p) values_[p] += o.values_[p];
    return *this;
}

template <class T>
VectorField<T>& VectorField<T>::operator-=(const VectorField& o) {
    require_same_grid(grid_, o.grid_, "field subtraction");
    for (std::size_t p = 0; p < values_.size(); ++p) values_[p] -= o.values_[p];
    return *this;
}

template <class T>
ScalarField<T>::ScalarField(GridSpec grid, std::vector<T> values) : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
        throw std::invalid_argument("field size does not match grid");
    }
}

template class VectorField<double>;
template class VectorField<cplx>;
template class ScalarField<double>;
template class ScalarField<cplx>;

VectorFieldC to_complex(const VectorFieldR& f) {
    VectorFieldC out(f.grid());
    for (std::size_t p = 0; p < f.size(); ++p) out[p] = to_complex(f[p]);
    return out;
}

VectorFieldC conj(const VectorFieldC& f) {
    VectorFieldC out(f.grid());
    for (std::size_t p = 0; p < f.size(); ++p) out[p] = conj(f[p]);
    return out;
}

VectorFieldR real_part(const VectorFieldC& f) {
    VectorFieldR out(f.grid());
    for (std::size_t p = 0; p < f.size(); ++p) {
        for (int a = 0; a < 3; ++a) out[p][a] = f[p][a].real();
    }
    return out;
}

VectorFieldR imag_part(const VectorFieldC& f) {
    VectorFieldR out(f.grid());
    for (std::size_t p = 0; p < f.size(); ++p) {
        for (int a = 0; a < 3; ++a) out[p][a] = f[p][a].imag();
    }
    return out;
}

double imaginary_residue(const VectorFieldC& f) {
    double im = 0.0;
    double mag = 0.0;
    for (const auto& v : f) {
        for (int a = 0; a < 3; ++a) im = std::max(im, std::abs(v[a].imag()));
        mag = std::max(mag, std::sqrt(norm2(v)));
    }
    return mag > 0.0 ? im / mag : 0.0;
}

VectorFieldR checked_real(const VectorFieldC& f, double tolerance) {
    const double r = imaginary_residue(f);
    if (r > tolerance) {
        throw ImaginaryResidue("imaginary residue " + std::to_string(r) + " exceeds " + std::to_string(tolerance));
    }
    return real_part(f);
}

double max_abs(const VectorFieldC& f) {
    double m = 0.0;
    for (const auto& v : f) m = std::max(m, norm2(v));
    return std::sqrt(m);
}

double max_abs(const VectorFieldR& f) {
    double m = 0.0;
    for (const auto& v : f) m = std::max(m, norm2(v));
    return std::sqrt(m);
}

bool all_finite(const VectorFieldC& f) {
    return std::all_of(f.begin(), f.end(), [](const Vec3c& v) {
        return std::isfinite(v[0].real()) && std::isfinite(v[0].imag()) && std::isfinite(v[1].real()) &&
               std::isfinite(v[1].imag()) && std::isfinite(v[2].real()) && std::isfinite(v[2].imag());
    });
}

} // namespace maxfock
