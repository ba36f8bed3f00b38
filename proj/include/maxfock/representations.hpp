#pragma once

#include <span>
#include <vector>

#include "maxfock/constants.hpp"
#include "maxfock/field.hpp"
#include "maxfock/spectral_ops.hpp"

namespace maxfock {

/// Coulomb-gauge canonical pair: vector potential and Pi = eps0 dA/dt = -eps0 E.
struct CanonicalPairLP {
    VectorFieldR A;
    VectorFieldR Pi;
};

/// Q = sqrt(eps0) E, P = B / sqrt(mu0) (RS); the BB pair replaces P with Lambda P.
struct CanonicalPair {
    VectorFieldR Q;
    VectorFieldR P;
};

struct EmFields {
    VectorFieldR E;
    VectorFieldR B;
};

struct PotentialFields {
    VectorFieldR A;
    VectorFieldR E;
    VectorFieldR B;
};

/// (F_BB^(h+), F_BB^(h-)); the lower half equals conj(F_RS^(h-)).
struct Bispinor {
    VectorFieldC upper;
    VectorFieldC lower;
};

CanonicalPair rs_canonical(const EmFields& fields, const PhysicalConstants& consts);
CanonicalPair bb_canonical(const EmFields& fields, const PhysicalConstants& consts);

/// psi = (2 hbar)^{-1/2} [ (eps0 Omega)^{1/2} A + i (eps0 Omega)^{-1/2} Pi ].
VectorFieldC lp_from_potentials(const CanonicalPairLP& pair, const PhysicalConstants& consts);

/// Inverse relations: A, E from psi +- psi*, B = curl A.
PotentialFields fields_from_lp(const VectorFieldC& psi, const PhysicalConstants& consts);

/// F_RS = sqrt(eps0/2) (E + i c B).
VectorFieldC rs_vector(const EmFields& fields, const PhysicalConstants& consts);
/// F_BB = sqrt(eps0/2) (E + i c Lambda B).
VectorFieldC bb_vector(const EmFields& fields, const PhysicalConstants& consts);

EmFields fields_from_bb(const VectorFieldC& f_bb, const PhysicalConstants& consts);
EmFields fields_from_rs(const VectorFieldC& f_rs, const PhysicalConstants& consts);

Bispinor bispinor_split(const VectorFieldC& f_bb);
VectorFieldC bispinor_join(const Bispinor& psi_bb);

/// <F|G>_BB = (1/hbar) int F* . Omega^{-1} G.
cplx inner_bb(const VectorFieldC& f, const VectorFieldC& g, const PhysicalConstants& consts);

/// hbar int psi* . Omega psi.
double hamilton_lp(const VectorFieldC& psi, const PhysicalConstants& consts);
/// c int F* . curl F (sign-indefinite).
double k_rs(const VectorFieldC& f_rs, const PhysicalConstants& consts);
/// int (F+* . Omega F+ - F-* . Omega F-): the helicity-resolved route to the same value.
double k_rs_helicity_form(const VectorFieldC& f_rs, const PhysicalConstants& consts);
/// int F* . Omega F (non-negative).
double k_bb(const VectorFieldC& f_bb, const PhysicalConstants& consts);
/// (1/2) int (eps0 E^2 + B^2 / mu0).
double total_energy(const EmFields& fields, const PhysicalConstants& consts);

// ---- harmonic oscillator variables ----

enum class ModeVariant { LP, RS };

struct RealModeVariables {
    std::vector<double> p;
    std::vector<double> q;
    std::vector<double> omega;
};

/// LP: p = -i sqrt(hbar eps0 w / 2) (z - z*), q = sqrt(hbar / (2 eps0 w)) (z + z*).
/// RS drops hbar.
RealModeVariables real_mode_split(std::span<const cplx> z, std::span<const double> omega,
                                  ModeVariant variant, const PhysicalConstants& consts);
std::vector<cplx> real_mode_join(const RealModeVariables& vars, ModeVariant variant,
                                 const PhysicalConstants& consts);

/// sum_k (p^2/2eps0 + eps0 w^2 q^2/2), with the minus-helicity entries negated when
/// `signs` is non-empty (RS form).
double oscillator_energy(const RealModeVariables& vars, const PhysicalConstants& consts,
                         std::span<const int> signs = {});

} // namespace maxfock
