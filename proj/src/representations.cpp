#include "maxfock/representations.hpp"

#include <cmath>
#include <stdexcept>

#include "maxfock/transforms.hpp"

namespace maxfock {
namespace {

constexpr cplx I{0.0, 1.0};

VectorFieldC scaled(const VectorFieldR& f, double s) {
    VectorFieldC out = to_complex(f);
    out *= cplx(s);
    return out;
}

VectorFieldR scaled_real(const VectorFieldR& f, double s) {
    VectorFieldR out = f;
    out *= s;
    return out;
}

} // namespace

CanonicalPair rs_canonical(const EmFields& fields, const PhysicalConstants& consts) {
    return {scaled_real(fields.E, std::sqrt(consts.eps0)), scaled_real(fields.B, 1.0 / std::sqrt(consts.mu0()))};
}

CanonicalPair bb_canonical(const EmFields& fields, const PhysicalConstants& consts) {
    return {scaled_real(fields.E, std::sqrt(consts.eps0)),
            scaled_real(helicity(fields.B), 1.0 / std::sqrt(consts.mu0()))};
}

VectorFieldC lp_from_potentials(const CanonicalPairLP& pair, const PhysicalConstants& consts) {
    const double pre = 1.0 / std::sqrt(2.0 * consts.hbar);
    VectorFieldC a = omega_pow(to_complex(pair.A), 0.5, consts);
    a *= cplx(pre * std::sqrt(consts.eps0));
    VectorFieldC pi = omega_pow(to_complex(pair.Pi), -0.5, consts);
    pi *= I * (pre / std::sqrt(consts.eps0));
    return a + pi;
}

PotentialFields fields_from_lp(const VectorFieldC& psi, const PhysicalConstants& consts) {
    const double pre = std::sqrt(consts.hbar / (2.0 * consts.eps0));
    const VectorFieldC psi_c = conj(psi);
    VectorFieldC a = omega_pow(psi + psi_c, -0.5, consts);
    a *= cplx(pre);
    VectorFieldC e = omega_pow(psi - psi_c, 0.5, consts);
    e *= I * pre;
    VectorFieldR A = checked_real(a);
    VectorFieldR B = curl(A);
    return {std::move(A), checked_real(e), std::move(B)};
}

VectorFieldC rs_vector(const EmFields& fields, const PhysicalConstants& consts) {
    const double pre = std::sqrt(consts.eps0 / 2.0);
    VectorFieldC out = scaled(fields.E, pre);
    VectorFieldC b = scaled(fields.B, pre * consts.c);
    b *= I;
    return out + b;
}

VectorFieldC bb_vector(const EmFields& fields, const PhysicalConstants& consts) {
    const double pre = std::sqrt(consts.eps0 / 2.0);
    VectorFieldC out = scaled(fields.E, pre);
    VectorFieldC b = helicity(to_complex(fields.B));
    b *= I * (pre * consts.c);
    return out + b;
}

EmFields fields_from_bb(const VectorFieldC& f_bb, const PhysicalConstants& consts) {
    const double s = 1.0 / std::sqrt(2.0 * consts.eps0);
    const VectorFieldC fc = conj(f_bb);
    VectorFieldC e = f_bb + fc;
    e *= cplx(s);
    VectorFieldC b = helicity(f_bb - fc);
    b *= -I * (s / consts.c);
    return {checked_real(e), checked_real(b)};
}

EmFields fields_from_rs(const VectorFieldC& f_rs, const PhysicalConstants& consts) {
    const double s = 1.0 / std::sqrt(2.0 * consts.eps0);
    const VectorFieldC fc = conj(f_rs);
    VectorFieldC e = f_rs + fc;
    e *= cplx(s);
    VectorFieldC b = f_rs - fc;
    b *= -I * (s / consts.c);
    return {checked_real(e), checked_real(b)};
}

Bispinor bispinor_split(const VectorFieldC& f_bb) {
    return {project_helicity(f_bb, Helicity::Plus), project_helicity(f_bb, Helicity::Minus)};
}

VectorFieldC bispinor_join(const Bispinor& psi_bb) { return psi_bb.upper + psi_bb.lower; }

cplx inner_bb(const VectorFieldC& f, const VectorFieldC& g, const PhysicalConstants& consts) {
    return inner_lp(f, omega_pow(g, -1.0, consts)) / consts.hbar;
}

double hamilton_lp(const VectorFieldC& psi, const PhysicalConstants& consts) {
    return consts.hbar * inner_lp(psi, omega_pow(psi, 1.0, consts)).real();
}

double k_rs(const VectorFieldC& f_rs, const PhysicalConstants& consts) {
    return consts.c * inner_lp(f_rs, curl(f_rs)).real();
}

double k_rs_helicity_form(const VectorFieldC& f_rs, const PhysicalConstants& consts) {
    const VectorFieldC plus = project_helicity(f_rs, Helicity::Plus, true);
    const VectorFieldC minus = project_helicity(f_rs, Helicity::Minus, true);
    return inner_lp(plus, omega_pow(plus, 1.0, consts)).real() - inner_lp(minus, omega_pow(minus, 1.0, consts)).real();
}

double k_bb(const VectorFieldC& f_bb, const PhysicalConstants& consts) {
    return inner_lp(f_bb, omega_pow(f_bb, 1.0, consts)).real();
}

double total_energy(const EmFields& fields, const PhysicalConstants& consts) {
    return 0.5 * (consts.eps0 * inner_lp(fields.E, fields.E) + inner_lp(fields.B, fields.B) / consts.mu0());
}

RealModeVariables real_mode_split(std::span<const cplx> z, std::span<const double> omega, ModeVariant variant,
                                  const PhysicalConstants& consts) {
    if (z.size() != omega.size()) throw std::invalid_argument("real_mode_split: amplitude/frequency size mismatch");
    const double h = variant == ModeVariant::LP ? consts.hbar : 1.0;
    RealModeVariables out;
    out.p.resize(z.size());
    out.q.resize(z.size());
    out.omega.assign(omega.begin(), omega.end());
    for (std::size_t j = 0; j < z.size(); ++j) {
        const double w = omega[j];
        out.p[j] = std::sqrt(2.0 * h * consts.eps0 * w) * z[j].imag();
        out.q[j] = 2.0 * std::sqrt(h / (2.0 * consts.eps0 * w)) * z[j].real();
    }
    return out;
}

std::vector<cplx> real_mode_join(const RealModeVariables& vars, ModeVariant variant, const PhysicalConstants& consts) {
    const double h = variant == ModeVariant::LP ? consts.hbar : 1.0;
    std::vector<cplx> z(vars.p.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        const double ew = consts.eps0 * vars.omega[j];
        z[j] = (std::sqrt(ew) * vars.q[j] + I * (vars.p[j] / std::sqrt(ew))) / std::sqrt(2.0 * h);
    }
    return z;
}

double oscillator_energy(const RealModeVariables& vars, const PhysicalConstants& consts, std::span<const int> signs) {
    double total = 0.0;
    for (std::size_t j = 0; j < vars.p.size(); ++j) {
        const double w = vars.omega[j];
        const double e = vars.p[j] * vars.p[j] / (2.0 * consts.eps0) + consts.eps0 * w * w * vars.q[j] * vars.q[j] / 2.0;
        total += (signs.empty() || signs[j] >= 0) ? e : -e;
    }
    return total;
}

} // namespace maxfock
