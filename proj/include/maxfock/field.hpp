#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "maxfock/grid.hpp"
#include "maxfock/vec3.hpp"

namespace maxfock {

/// A 3-vector per grid point. T is double (real fields) or cplx.
template <class T>
class VectorField {
public:
    using value_type = Vec3<T>;

    explicit VectorField(GridSpec grid) : grid_(grid), values_(grid.size()) {}
    VectorField(GridSpec grid, std::vector<value_type> values);

    [[nodiscard]] const GridSpec& grid() const noexcept { return grid_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

    value_type& operator[](std::size_t p) noexcept { return values_[p]; }
    const value_type& operator[](std::size_t p) const noexcept { return values_[p]; }

    [[nodiscard]] std::span<value_type> values() noexcept { return values_; }
    [[nodiscard]] std::span<const value_type> values() const noexcept { return values_; }

    auto begin() noexcept { return values_.begin(); }
    auto end() noexcept { return values_.end(); }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    /// Flat view, component-innermost.
    [[nodiscard]] T* data() noexcept { return values_.data()->c.data(); }
    [[nodiscard]] const T* data() const noexcept { return values_.data()->c.data(); }

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    VectorField& operator*=(const T& s) noexcept {
        for (auto& v : values_) v *= s;
        return *this;
    }

    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(VectorField a, const T& s) { return a *= s; }
    friend VectorField operator*(const T& s, VectorField a) { return a *= s; }

private:
    GridSpec grid_;
    std::vector<value_type> values_;
};

template <class T>
class ScalarField {
public:
    explicit ScalarField(GridSpec grid) : grid_(grid), values_(grid.size()) {}
    ScalarField(GridSpec grid, std::vector<T> values);

    [[nodiscard]] const GridSpec& grid() const noexcept { return grid_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    T& operator[](std::size_t p) noexcept { return values_[p]; }
    const T& operator[](std::size_t p) const noexcept { return values_[p]; }
    [[nodiscard]] std::span<T> values() noexcept { return values_; }
    [[nodiscard]] std::span<const T> values() const noexcept { return values_; }

private:
    GridSpec grid_;
    std::vector<T> values_;
};

using VectorFieldC = VectorField<cplx>;
using VectorFieldR = VectorField<double>;
using ScalarFieldC = ScalarField<cplx>;
using ScalarFieldR = ScalarField<double>;

/// Fourier coefficients F(k) with f(x) = sum_k F(k) exp(i k.x), stored in FFT slot order.
class SpectralField {
public:
    explicit SpectralField(GridSpec grid) : grid_(grid), coeffs_(grid.size()) {}

    [[nodiscard]] const GridSpec& grid() const noexcept { return grid_; }
    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
    Vec3c& operator[](std::size_t p) noexcept { return coeffs_[p]; }
    const Vec3c& operator[](std::size_t p) const noexcept { return coeffs_[p]; }
    [[nodiscard]] std::span<Vec3c> values() noexcept { return coeffs_; }
    [[nodiscard]] std::span<const Vec3c> values() const noexcept { return coeffs_; }

private:
    GridSpec grid_;
    std::vector<Vec3c> coeffs_;
};

// ---- elementwise helpers ----

VectorFieldC to_complex(const VectorFieldR& f);
VectorFieldC conj(const VectorFieldC& f);
VectorFieldR real_part(const VectorFieldC& f);
VectorFieldR imag_part(const VectorFieldC& f);

/// max_x |Im f(x)| / max_x |f(x)|, 0 for the zero field.
double imaginary_residue(const VectorFieldC& f);

/// real_part(f) after checking imaginary_residue(f) <= tolerance; throws ImaginaryResidue.
VectorFieldR checked_real(const VectorFieldC& f, double tolerance = 1e-12);

/// max_x |f(x)| (Euclidean norm of the 3-vector).
double max_abs(const VectorFieldC& f);
double max_abs(const VectorFieldR& f);

bool all_finite(const VectorFieldC& f);

} // namespace maxfock
