#include "maxfock/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "maxfock/maps.hpp"
#include "maxfock/spectral_ops.hpp"
#include "maxfock/transforms.hpp"

namespace maxfock {
namespace {

constexpr cplx I{0.0, 1.0};

double scalar_norm(const ScalarFieldC& f) { return std::sqrt(inner_lp(f, f).real()); }

} // namespace

VectorFieldC evolve(const VectorFieldC& f, double t, const PhysicalConstants& consts) {
    if (t == 0.0) return f;
    const double c = consts.c;
    return apply_symbol(f, [c, t](const Wavevector& w, const Vec3c& v) {
        return v * std::polar(1.0, -c * w.magnitude * t);
    });
}

Bispinor evolve(const Bispinor& psi_bb, double t, const PhysicalConstants& consts) {
    return {evolve(psi_bb.upper, t, consts), evolve(psi_bb.lower, t, consts)};
}

VectorFieldC evolve_rs(const VectorFieldC& f_rs, double t, const PhysicalConstants& consts) {
    if (t == 0.0) return f_rs;
    const double c = consts.c;
    return apply_symbol(f_rs, [c, t](const Wavevector& w, const Vec3c& v) {
        if (w.zero) return v;
        const Vec3c k = to_complex(w.k);
        const double k2 = w.magnitude * w.magnitude;
        const Vec3c trans = v - k * (dot(k, v) / k2);
        const Vec3c lam = cross(k, trans) * (I / w.magnitude);
        const Vec3c plus = (trans + lam) * cplx(0.5);
        const Vec3c minus = (trans - lam) * cplx(0.5);
        const double phase = c * w.magnitude * t;
        return (v - trans) + plus * std::polar(1.0, -phase) + minus * std::polar(1.0, phase);
    });
}

EmFields evolve_fields(const EmFields& fields, double t, const PhysicalConstants& consts) {
    return fields_from_rs(evolve_rs(rs_vector(fields, consts), t, consts), consts);
}

EmFields analytic_circular_wave(const GridSpec& grid, const KIndex& n, Helicity s, double t,
                                const PhysicalConstants& consts) {
    if (n[0] != 0 || n[1] != 0 || n[2] <= 0) {
        throw std::invalid_argument("analytic circular wave needs k along +z");
    }
    if (!grid.in_range(n)) throw std::invalid_argument("analytic circular wave: k beyond the Nyquist plane");
    const double k = grid.k_vector(n)[2];
    const double w = consts.c * k;
    const double amp = 1.0 / std::sqrt(consts.eps0 * grid.volume());
    const double sg = sign(s);
    EmFields out{VectorFieldR(grid), VectorFieldR(grid)};
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const double th = k * grid.position(p)[2] - w * t;
        const double co = std::cos(th), si = std::sin(th);
        out.E[p] = {{amp * co, -sg * amp * si, 0.0}};
        out.B[p] = {{sg * amp * si / consts.c, amp * co / consts.c, 0.0}};
    }
    return out;
}

Bispinor elliptic_bispinor(cplx alpha_plus, cplx alpha_minus, const GridSpec& grid, const KIndex& n, double t,
                           const PhysicalConstants& consts) {
    const double n2 = std::norm(alpha_plus) + std::norm(alpha_minus);
    if (std::abs(n2 - 1.0) > 1e-12) throw std::invalid_argument("elliptic coefficients must satisfy |a+|^2 + |a-|^2 = 1");
    const double w = consts.c * std::sqrt(norm2(grid.k_vector(n)));
    const cplx phase = std::polar(1.0, -w * t);
    VectorFieldC upper = plane_wave_mode(grid, n, Helicity::Plus);
    upper *= alpha_plus * phase;
    VectorFieldC lower = plane_wave_mode(grid, n, Helicity::Minus);
    lower *= alpha_minus * phase;
    return {std::move(upper), std::move(lower)};
}

EmFields snapshot_fields(const VectorFieldC& snapshot, RunRepresentation rep, const PhysicalConstants& consts) {
    switch (rep) {
    case RunRepresentation::LP: {
        auto pf = fields_from_lp(snapshot, consts);
        return {std::move(pf.E), std::move(pf.B)};
    }
    case RunRepresentation::BB:
        return fields_from_bb(snapshot, consts);
    case RunRepresentation::RS:
    case RunRepresentation::Fields:
        return fields_from_rs(snapshot, consts);
    }
    throw std::invalid_argument("unknown run representation");
}

ConservationRecord conserved_quantities(const VectorFieldC& snapshot, RunRepresentation rep, double t,
                                        const PhysicalConstants& consts) {
    const EmFields fields = snapshot_fields(snapshot, rep, consts);
    const VectorFieldC f_bb = rep == RunRepresentation::BB ? snapshot : bb_vector(fields, consts);
    const VectorFieldC psi = rep == RunRepresentation::LP ? snapshot : iso_i_inverse(f_bb, consts);
    const VectorFieldC f_rs = (rep == RunRepresentation::RS || rep == RunRepresentation::Fields)
                                  ? snapshot
                                  : rs_vector(fields, consts);
    const double kmax = snapshot.grid().dk() * (snapshot.grid().points_per_axis() / 2);
    const double ref = norm_lp(fields.E) + consts.c * norm_lp(fields.B);
    const double div = scalar_norm(divergence(fields.E)) + consts.c * scalar_norm(divergence(fields.B));
    return {t,
            hamilton_lp(psi, consts),
            k_bb(f_bb, consts),
            k_rs(f_rs, consts),
            total_energy(fields, consts),
            ref > 0.0 ? div / (kmax * ref) : 0.0};
}

EvolutionRun run_evolution(const VectorFieldC& initial, RunRepresentation rep, double dt, int steps,
                           const PhysicalConstants& consts) {
    if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
    if (steps < 0) throw std::invalid_argument("step count must be non-negative");
    EvolutionRun run{rep, initial, {}, {}, {}};
    const bool rs = rep == RunRepresentation::RS || rep == RunRepresentation::Fields;
    for (int j = 0; j <= steps; ++j) {
        const double t = j * dt;
        VectorFieldC snap = rs ? evolve_rs(initial, t, consts) : evolve(initial, t, consts);
        run.log.push_back(conserved_quantities(snap, rep, t, consts));
        run.times.push_back(t);
        run.snapshots.push_back(std::move(snap));
    }
    return run;
}

std::array<double, 4> max_relative_drift(const EvolutionRun& run) {
    std::array<double, 4> drift{};
    if (run.log.empty()) return drift;
    const auto& r0 = run.log.front();
    const std::array<double, 4> base{r0.h_lp, r0.k_bb, r0.k_rs, r0.e_tot};
    for (const auto& r : run.log) {
        const std::array<double, 4> v{r.h_lp, r.k_bb, r.k_rs, r.e_tot};
        for (int q = 0; q < 4; ++q) {
            const double d = std::abs(v[q] - base[q]);
            drift[q] = std::max(drift[q], base[q] != 0.0 ? d / std::abs(base[q]) : d);
        }
    }
    return drift;
}

MaxwellResiduals maxwell_residuals(const EvolutionRun& run, const PhysicalConstants& consts) {
    const std::size_t n = run.snapshots.size();
    if (n < 3) throw std::invalid_argument("Maxwell residuals need at least 3 snapshots");
    const double h = run.times[1] - run.times[0];
    for (std::size_t j = 1; j < n; ++j) {
        if (std::abs((run.times[j] - run.times[j - 1]) - h) > 1e-9 * std::abs(h)) {
            throw std::invalid_argument("Maxwell residuals need equally spaced snapshots");
        }
    }
    std::vector<EmFields> fields;
    fields.reserve(n);
    for (const auto& s : run.snapshots) fields.push_back(snapshot_fields(s, run.representation, consts));

    MaxwellResiduals out;
    out.h = h;
    const double c2 = consts.c * consts.c;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        VectorFieldR dE = fields[j + 1].E - fields[j - 1].E;
        dE *= 1.0 / (2.0 * h);
        VectorFieldR dB = fields[j + 1].B - fields[j - 1].B;
        dB *= 1.0 / (2.0 * h);
        VectorFieldR curl_b = curl(fields[j].B);
        curl_b *= c2;
        out.ampere = std::max(out.ampere, norm_lp(dE - curl_b));
        out.faraday = std::max(out.faraday, norm_lp(dB + curl(fields[j].E)));
        out.scale = std::max(out.scale, norm_lp(dE) + consts.c * norm_lp(dB));
    }
    for (const auto& f : fields) {
        out.div_e = std::max(out.div_e, scalar_norm(divergence(f.E)));
        out.div_b = std::max(out.div_b, scalar_norm(divergence(f.B)));
    }
    return out;
}

ResidualConvergence maxwell_convergence(const VectorFieldC& f_bb, double t0, double h, const PhysicalConstants& consts) {
    ResidualConvergence out;
    std::array<double, 3> combined{};
    for (int l = 0; l < 3; ++l) {
        const double hl = h / static_cast<double>(1 << l);
        const auto run = run_evolution(evolve(f_bb, t0 - hl, consts), RunRepresentation::BB, hl, 2, consts);
        out.levels[l] = maxwell_residuals(run, consts);
        combined[l] = out.levels[l].ampere + consts.c * out.levels[l].faraday;
    }
    for (int l = 0; l < 2; ++l) out.order[l] = std::log2(combined[l] / combined[l + 1]);
    return out;
}

double default_residual_step(const VectorFieldC& f, const PhysicalConstants& consts) {
    const SpectralField F = to_spectral(f);
    const auto& grid = f.grid();
    double peak = 0.0;
    for (const auto& v : F.values()) peak = std::max(peak, norm2(v));
    peak = std::sqrt(peak);
    double wmax = 0.0;
    for (std::size_t p = 0; p < grid.size(); ++p) {
        if (std::sqrt(norm2(F[p])) > 1e-12 * peak) {
            const auto w = grid.wavevector(p);
            if (!w.nyquist) wmax = std::max(wmax, consts.c * w.magnitude);
        }
    }
    if (wmax == 0.0) throw std::invalid_argument("default residual step undefined for a static field");
    return 2.0 * std::numbers::pi / (64.0 * wmax);
}

} // namespace maxfock
