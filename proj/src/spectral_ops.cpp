#include <array>
#include "maxfock/spectral_ops.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "maxfock/errors.hpp"
#include "maxfock/transforms.hpp"

namespace maxfock {
namespace {

constexpr cplx I{0.0, 1.0};

VectorFieldR real_result(const VectorFieldC& f) { return checked_real(f); }

ScalarFieldC apply_scalar(const ScalarFieldC& g, const std::function<cplx(const Wavevector&, cplx)>& symbol) {
    ScalarFieldC G = scalar_to_spectral(g);
    const auto& grid = g.grid();
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const auto w = grid.wavevector(p);
        G[p] = w.nyquist ? cplx(0.0) : symbol(w, G[p]);
    }
    return scalar_from_spectral(G);
}

ScalarFieldC divergence_spectral(const SpectralField& F) {
    const auto& grid = F.grid();
    ScalarFieldC D(grid);
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const auto w = grid.wavevector(p);
        if (!w.nyquist) D[p] = I * dot(to_complex(w.k), F[p]);
    }
    return scalar_from_spectral(D);
}

} // namespace

const std::array<Matrix3c, 3>& spin_matrices() noexcept {
    static const std::array<Matrix3c, 3> s = [] {
        std::array<Matrix3c, 3> m{};
        auto eps = [](int j, int k, int l) -> double {
            return static_cast<double>((j - k) * (k - l) * (l - j)) / 2.0;
        };
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) m[j][k][l] = -I * eps(j, k, l);
        return m;
    }();
    return s;
}

PolarizationPair polarization(const Vec3d& k) {
    const double kx = k[0], ky = k[1], kz = k[2];
    const double kabs = std::sqrt(norm2(k));
    if (kabs == 0.0) throw ZeroModeRequest("polarization vectors are undefined at k = 0");
    const double kperp2 = kx * kx + ky * ky;
    PolarizationPair out{k, {}, {}};
    if (kperp2 == 0.0) {
        const double s = kz > 0.0 ? 1.0 : -1.0;
        out.eps_plus = {{cplx((1.0 / std::numbers::sqrt2)), I * s * (1.0 / std::numbers::sqrt2), 0.0}};
    } else {
        const double norm = 1.0 / (std::numbers::sqrt2 * kabs * std::sqrt(kperp2));
        out.eps_plus = {{cplx(-kx * kz, kabs * ky) * norm, cplx(-ky * kz, -kabs * kx) * norm, cplx(kperp2 * norm)}};
    }
    out.eps_minus = conj(out.eps_plus);
    return out;
}

VectorFieldC apply_symbol(const VectorFieldC& f, const SpectralSymbol& symbol) {
    SpectralField F = to_spectral(f);
    const auto& grid = f.grid();
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const auto w = grid.wavevector(p);
        F[p] = w.nyquist ? Vec3c{} : symbol(w, F[p]);
    }
    return from_spectral(F);
}

VectorFieldC curl(const VectorFieldC& f) {
    return apply_symbol(f, [](const Wavevector& w, const Vec3c& v) { return cross(to_complex(w.k), v) * I; });
}
VectorFieldR curl(const VectorFieldR& f) { return real_result(curl(to_complex(f))); }

ScalarFieldC divergence(const VectorFieldC& f) { return divergence_spectral(to_spectral(f)); }
ScalarFieldC divergence(const VectorFieldR& f) { return divergence_spectral(to_spectral(f)); }

VectorFieldC gradient(const ScalarFieldC& g) {
    ScalarFieldC G = scalar_to_spectral(g);
    const auto& grid = g.grid();
    SpectralField F(grid);
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const auto w = grid.wavevector(p);
        if (!w.nyquist) F[p] = to_complex(w.k) * (I * G[p]);
    }
    return from_spectral(F);
}

ScalarFieldC laplacian(const ScalarFieldC& g) {
    return apply_scalar(g, [](const Wavevector& w, cplx v) { return -norm2(w.k) * v; });
}

double zero_mode_fraction(const VectorFieldC& f) {
    const double total = norm_lp(f);
    if (total == 0.0) return 0.0;
    // compensated sums: naive accumulation over N^3 points leaves ~1e-14 of spurious mean
    std::array<double, 6> sum{}, comp{};
    for (const auto& v : f) {
        for (int a = 0; a < 3; ++a) {
            const double parts[2] = {v[a].real(), v[a].imag()};
            for (int r = 0; r < 2; ++r) {
                const int i = 2 * a + r;
                const double t = sum[i] + parts[r];
                comp[i] += std::abs(sum[i]) >= std::abs(parts[r]) ? (sum[i] - t) + parts[r] : (parts[r] - t) + sum[i];
                sum[i] = t;
            }
        }
    }
    double m2 = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double m = (sum[i] + comp[i]) / static_cast<double>(f.size());
        m2 += m * m;
    }
    return std::sqrt(m2 * f.grid().volume()) / total;
}

void require_no_zero_mode(const VectorFieldC& f, const char* context) {
    const double frac = zero_mode_fraction(f);
    if (frac > 1e-14) {
        throw NegativePowerOnZeroMode(std::string(context) + ": field has k=0 content (relative " +
                                      std::to_string(frac) + ")");
    }
}

VectorFieldC omega_pow(const VectorFieldC& f, double alpha, const PhysicalConstants& consts) {
    if (alpha == 0.0) return f;
    if (alpha < -2.0 || alpha > 2.0) throw std::invalid_argument("omega_pow exponent outside [-2, 2]");
    if (alpha < 0.0) require_no_zero_mode(f, "omega_pow");
    const double c = consts.c;
    return apply_symbol(f, [alpha, c](const Wavevector& w, const Vec3c& v) {
        if (w.zero) return Vec3c{};
        return v * cplx(std::pow(c * w.magnitude, alpha));
    });
}

VectorFieldR omega_pow(const VectorFieldR& f, double alpha, const PhysicalConstants& consts) {
    if (alpha == 0.0) return f;
    return real_result(omega_pow(to_complex(f), alpha, consts));
}

VectorFieldC helicity(const VectorFieldC& f) {
    require_no_zero_mode(f, "helicity");
    return apply_symbol(f, [](const Wavevector& w, const Vec3c& v) {
        if (w.zero) return Vec3c{};
        return cross(to_complex(w.k), v) * (I / w.magnitude);
    });
}
VectorFieldR helicity(const VectorFieldR& f) { return real_result(helicity(to_complex(f))); }

VectorFieldC project_transverse(const VectorFieldC& f) {
    return apply_symbol(f, [](const Wavevector& w, const Vec3c& v) {
        if (w.zero) return Vec3c{};
        const Vec3c kc = to_complex(w.k);
        return v - kc * (dot(kc, v) / (w.magnitude * w.magnitude));
    });
}
VectorFieldR project_transverse(const VectorFieldR& f) { return real_result(project_transverse(to_complex(f))); }

VectorFieldC project_helicity(const VectorFieldC& f, Helicity s, bool transverse_first) {
    const double sg = sign(s);
    if (!transverse_first) require_no_zero_mode(f, "project_helicity");
    return apply_symbol(f, [sg, transverse_first](const Wavevector& w, const Vec3c& v) {
        if (w.zero) return Vec3c{};
        Vec3c u = v;
        const Vec3c kc = to_complex(w.k);
        if (transverse_first) u = u - kc * (dot(kc, u) / (w.magnitude * w.magnitude));
        const Vec3c lam = cross(kc, u) * (I / w.magnitude);
        return (u + lam * cplx(sg)) * cplx(0.5);
    });
}

VectorFieldR project_helicity(const VectorFieldR& f, Helicity s, bool transverse_first) {
    return real_result(project_helicity(to_complex(f), s, transverse_first));
}

VectorFieldC plane_wave_mode(const GridSpec& grid, const KIndex& n, Helicity s) {
    if (n[0] == 0 && n[1] == 0 && n[2] == 0) throw ZeroModeRequest("plane wave requested at k = 0");
    if (!grid.in_range(n)) throw NyquistRequest("plane wave index outside the open range (-N/2, N/2)");
    const Vec3d k = grid.k_vector(n);
    const Vec3c eps = polarization_vector(polarization(k), s) * cplx(1.0 / std::sqrt(grid.volume()));
    VectorFieldC out(grid);
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const double phase = dot(k, grid.position(p));
        out[p] = eps * std::polar(1.0, phase);
    }
    return out;
}

} // namespace maxfock
