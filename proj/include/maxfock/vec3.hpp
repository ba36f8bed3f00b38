#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace maxfock {

using cplx = std::complex<double>;

/// Three-component vector; layout-compatible with T[3].
template <class T>
struct Vec3 {
    std::array<T, 3> c{};

    constexpr T& operator[](std::size_t i) noexcept { return c[i]; }
    constexpr const T& operator[](std::size_t i) const noexcept { return c[i]; }

    Vec3& operator+=(const Vec3& o) noexcept {
        for (std::size_t i = 0; i < 3; ++i) c[i] += o.c[i];
        return *this;
    }
    Vec3& operator-=(const Vec3& o) noexcept {
        for (std::size_t i = 0; i < 3; ++i) c[i] -= o.c[i];
        return *this;
    }
    Vec3& operator*=(const T& s) noexcept {
        for (auto& x : c) x *= s;
        return *this;
    }

    friend Vec3 operator+(Vec3 a, const Vec3& b) noexcept { return a += b; }
    friend Vec3 operator-(Vec3 a, const Vec3& b) noexcept { return a -= b; }
    friend Vec3 operator*(Vec3 a, const T& s) noexcept { return a *= s; }
    friend Vec3 operator*(const T& s, Vec3 a) noexcept { return a *= s; }
    friend Vec3 operator-(Vec3 a) noexcept {
        for (auto& x : a.c) x = -x;
        return a;
    }
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

using Vec3d = Vec3<double>;
using Vec3c = Vec3<cplx>;

static_assert(sizeof(Vec3c) == 3 * sizeof(cplx));
static_assert(sizeof(Vec3d) == 3 * sizeof(double));

inline Vec3c to_complex(const Vec3d& v) noexcept { return {{v[0], v[1], v[2]}}; }

inline Vec3c conj(const Vec3c& v) noexcept {
    return {{std::conj(v[0]), std::conj(v[1]), std::conj(v[2])}};
}

/// Sesquilinear a* . b.
inline cplx cdot(const Vec3c& a, const Vec3c& b) noexcept {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

/// Bilinear a . b (no conjugation).
template <class A, class B>
inline auto dot(const Vec3<A>& a, const Vec3<B>& b) noexcept {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class A, class B>
inline auto cross(const Vec3<A>& a, const Vec3<B>& b) noexcept {
    using R = decltype(a[0] * b[0]);
    return Vec3<R>{{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

inline double norm2(const Vec3c& v) noexcept {
    return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]);
}
inline double norm2(const Vec3d& v) noexcept { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }

} // namespace maxfock
