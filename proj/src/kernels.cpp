#include "maxfock/kernels.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "fft.hpp"
#include "maxfock/errors.hpp"
#include "maxfock/parallel.hpp"

namespace maxfock {
namespace {

using std::numbers::pi;

/// Gamma(a, x), continued to a <= 0 (a not a non-positive integer) by recurrence.
double upper_gamma(double a, double x) {
    if (a > 0.0) return boost::math::tgamma(a, x);
    return (upper_gamma(a + 1.0, x) - std::pow(x, a) * std::exp(-x)) / a;
}

double neg_half_constant(const PhysicalConstants& consts) {
    return pi / std::sqrt(consts.c) * std::pow(2.0 * pi, -2.5);
}

double pos_half_constant(const PhysicalConstants& consts) {
    return 3.0 * std::sqrt(2.0 * consts.c) / (16.0 * std::pow(pi, 1.5));
}

/// h^3 sum_{x' != x, x' in box} |x - x'|^{-power} f(x'), every component.
VectorFieldC punctured_sum(const VectorFieldC& f, double power, KernelEvaluation evaluation) {
    const auto& grid = f.grid();
    const int N = grid.points_per_axis();
    const double h = grid.spacing();
    const double h3 = grid.cell_volume();
    VectorFieldC out(grid);

    if (evaluation == KernelEvaluation::Direct) {
        parallel_for(grid.size(), [&](std::size_t begin, std::size_t end) {
            for (std::size_t p = begin; p < end; ++p) {
                const auto a = grid.coords(p);
                Vec3c acc{};
                for (std::size_t q = 0; q < grid.size(); ++q) {
                    if (q == p) continue;
                    const auto b = grid.coords(q);
                    const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
                    const double r = h * std::sqrt(dx * dx + dy * dy + dz * dz);
                    acc += f[q] * cplx(std::pow(r, -power));
                }
                out[p] = acc * cplx(h3);
            }
        });
        return out;
    }

    const int M = 2 * N;
    const std::size_t total = static_cast<std::size_t>(M) * M * M;
    auto slot = [M](int i, int j, int l) {
        return static_cast<std::size_t>(i) + static_cast<std::size_t>(M) * (j + static_cast<std::size_t>(M) * l);
    };
    auto disp = [N, M](int m) { return m < N ? m : m - M; };

    std::vector<double> kernel_hat(total);
    {
        std::vector<cplx> work(total);
        for (int l = 0; l < M; ++l) {
            for (int j = 0; j < M; ++j) {
                for (int i = 0; i < M; ++i) {
                    const int dx = disp(i), dy = disp(j), dz = disp(l);
                    if ((dx == 0 && dy == 0 && dz == 0) || i == N || j == N || l == N) continue;
                    const double r = h * std::sqrt(static_cast<double>(dx * dx + dy * dy + dz * dz));
                    work[slot(i, j, l)] = h3 * std::pow(r, -power);
                }
            }
        }
        detail::fft3_inplace(work.data(), M, 1, -1);
        // the kernel is real and even, so its transform is real
        for (std::size_t p = 0; p < total; ++p) kernel_hat[p] = work[p].real() / static_cast<double>(total);
    }

    std::vector<cplx> buf(total);
    for (int comp = 0; comp < 3; ++comp) {
        bool nonzero = false;
        for (const auto& v : f) {
            if (v[comp] != 0.0) {
                nonzero = true;
                break;
            }
        }
        if (!nonzero) continue;
        std::fill(buf.begin(), buf.end(), cplx(0.0));
        for (int l = 0; l < N; ++l)
            for (int j = 0; j < N; ++j)
                for (int i = 0; i < N; ++i) buf[slot(i, j, l)] = f[grid.index(i, j, l)][comp];
        detail::fft3_inplace(buf.data(), M, 1, -1);
        for (std::size_t p = 0; p < total; ++p) buf[p] *= kernel_hat[p];
        detail::fft3_inplace(buf.data(), M, 1, +1);
        for (int l = 0; l < N; ++l)
            for (int j = 0; j < N; ++j)
                for (int i = 0; i < N; ++i) out[grid.index(i, j, l)][comp] = buf[slot(i, j, l)];
    }
    return out;
}

/// Fourth-order periodic stencil Laplacian.
VectorFieldC stencil_laplacian(const VectorFieldC& f) {
    const auto& grid = f.grid();
    const int N = grid.points_per_axis();
    const double inv = 1.0 / (12.0 * grid.spacing() * grid.spacing());
    VectorFieldC out(grid);
    auto wrap = [N](int i) { return ((i % N) + N) % N; };
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const auto a = grid.coords(p);
        Vec3c acc = f[p] * cplx(-90.0);
        for (int axis = 0; axis < 3; ++axis) {
            auto at = [&](int offset) {
                auto b = a;
                b[axis] = wrap(b[axis] + offset);
                return f[grid.index(b[0], b[1], b[2])];
            };
            acc += (at(1) + at(-1)) * cplx(16.0) - (at(2) + at(-2));
        }
        out[p] = acc * cplx(inv);
    }
    return out;
}

void check_support(const VectorFieldC& f, const KernelOptions& options, const char* context) {
    if (!options.strict_support) return;
    const auto rep = support_report(f, options.support_tolerance);
    if (!rep.ok) {
        throw SupportTooLarge(std::string(context) + ": field not confined to radius L/4 with zero mean (outside " +
                              std::to_string(rep.outside_fraction) + ", mean " + std::to_string(rep.mean_fraction) + ")");
    }
}

} // namespace

double epstein_zeta_cubic(double s) {
    if (s == 0.0 || s == 3.0) throw std::domain_error("Epstein zeta has a pole or trivial value at s = 0, 3");
    constexpr int R = 6;
    double sum = 0.0;
    const double a1 = s / 2.0, a2 = (3.0 - s) / 2.0;
    for (int i = -R; i <= R; ++i) {
        for (int j = -R; j <= R; ++j) {
            for (int l = -R; l <= R; ++l) {
                const int n2 = i * i + j * j + l * l;
                if (n2 == 0) continue;
                const double x = pi * n2;
                sum += upper_gamma(a1, x) * std::pow(x, -a1) + upper_gamma(a2, x) * std::pow(x, -a2);
            }
        }
    }
    sum += 2.0 / (s - 3.0) - 2.0 / s;
    return sum / (std::pow(pi, -s / 2.0) * std::tgamma(s / 2.0));
}

SupportReport support_report(const VectorFieldC& f, double tolerance) {
    const auto& grid = f.grid();
    const double L = grid.box_length();
    const double rmax2 = (L / 4.0) * (L / 4.0);
    double outside = 0.0, all = 0.0, abs_sum = 0.0;
    Vec3c mean{};
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const auto x = grid.position(p);
        const double r2 = (x[0] - L / 2) * (x[0] - L / 2) + (x[1] - L / 2) * (x[1] - L / 2) + (x[2] - L / 2) * (x[2] - L / 2);
        const double v = norm2(f[p]);
        all += v;
        if (r2 > rmax2) outside += v;
        mean += f[p];
        abs_sum += std::sqrt(v);
    }
    SupportReport rep{0.0, 0.0, true};
    if (all == 0.0) return rep;
    rep.outside_fraction = std::sqrt(outside / all);
    rep.mean_fraction = std::sqrt(norm2(mean)) / abs_sum;
    rep.ok = rep.outside_fraction <= tolerance && rep.mean_fraction <= tolerance;
    return rep;
}

VectorFieldC riesz_neg_half(const VectorFieldC& f, const PhysicalConstants& consts, const KernelOptions& options) {
    check_support(f, options, "riesz_neg_half");
    const double C = neg_half_constant(consts);
    const double h = f.grid().spacing();
    VectorFieldC out = punctured_sum(f, 2.5, options.evaluation);
    out *= cplx(C);
    VectorFieldC self = f;
    self *= cplx(-C * std::sqrt(h) * epstein_zeta_cubic(2.5));
    return out + self;
}

VectorFieldC riesz_pos_half(const VectorFieldC& f, const PhysicalConstants& consts, const KernelOptions& options) {
    check_support(f, options, "riesz_pos_half");
    const double C = pos_half_constant(consts);
    const double h = f.grid().spacing();
    VectorFieldC out = f;
    out *= cplx(C * epstein_zeta_cubic(3.5) / std::sqrt(h));
    VectorFieldC conv = punctured_sum(f, 3.5, options.evaluation);
    conv *= cplx(C);
    out -= conv;
    if (options.pv_rule == PrincipalValueRule::CurvatureCorrected) {
        VectorFieldC lap = stencil_laplacian(f);
        lap *= cplx(C * std::pow(h, 1.5) * epstein_zeta_cubic(1.5) / 6.0);
        out += lap;
    }
    return out;
}

VectorFieldC gaussian_test_field(const GridSpec& grid, double sigma, double k0) {
    const double c = grid.box_length() / 2.0;
    VectorFieldC out(grid);
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const auto x = grid.position(p);
        const double dx = x[0] - c, dy = x[1] - c, dz = x[2] - c;
        const double r2 = dx * dx + dy * dy + dz * dz;
        out[p][0] = std::exp(-r2 / (2.0 * sigma * sigma)) * std::sin(k0 * dx);
    }
    return out;
}

} // namespace maxfock
