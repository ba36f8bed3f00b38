#include "maxfock/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "maxfock/errors.hpp"

namespace maxfock {

GridSpec::GridSpec(double box_length, int points_per_axis) : length_(box_length), n_(points_per_axis) {
    if (!(box_length > 0.0) || !std::isfinite(box_length)) {
        throw std::invalid_argument("box length must be positive and finite");
    }
    if (points_per_axis < 4 || points_per_axis % 2 != 0) {
        throw std::invalid_argument("points per axis must be even and >= 4, got " + std::to_string(points_per_axis));
    }
}

Wavevector GridSpec::wavevector(std::size_t p) const noexcept {
    const auto m = coords(p);
    Wavevector w;
    for (int a = 0; a < 3; ++a) {
        w.n[a] = signed_index(m[a]);
        w.nyquist = w.nyquist || (w.n[a] == -n_ / 2);
    }
    w.k = k_vector(w.n);
    w.magnitude = std::sqrt(norm2(w.k));
    w.zero = (w.n[0] == 0 && w.n[1] == 0 && w.n[2] == 0);
    return w;
}

bool GridSpec::in_range(const KIndex& n) const noexcept {
    for (int v : n) {
        if (v <= -n_ / 2 || v >= n_ / 2) return false;
    }
    return true;
}

bool GridSpec::is_nyquist(const KIndex& n) const noexcept {
    for (int v : n) {
        if (v == -n_ / 2 || v == n_ / 2) return true;
    }
    return false;
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* context) {
    if (!(a == b)) {
        throw GridMismatch(std::string(context) + ": operands live on different grids");
    }
}

} // namespace maxfock
