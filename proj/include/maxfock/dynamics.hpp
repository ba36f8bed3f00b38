#pragma once

#include <array>
#include <complex>
#include <vector>

#include "maxfock/constants.hpp"
#include "maxfock/field.hpp"
#include "maxfock/representations.hpp"

namespace maxfock {

/// exp(-i Omega t) f: every mode picks up exp(-i w_k t). Generator for LP and BB.
VectorFieldC evolve(const VectorFieldC& f, double t, const PhysicalConstants& consts);
Bispinor evolve(const Bispinor& psi_bb, double t, const PhysicalConstants& consts);
/// exp(-i c curl t) F_RS: helicity + modes rotate as exp(-i w t), helicity - as exp(+i w t).
VectorFieldC evolve_rs(const VectorFieldC& f_rs, double t, const PhysicalConstants& consts);
EmFields evolve_fields(const EmFields& fields, double t, const PhysicalConstants& consts);

/// Closed-form circularly polarized wave along +z with box normalization:
/// E = (eps0 V)^{-1/2} (cos th, -+ sin th, 0), c B = (eps0 V)^{-1/2} (+- sin th, cos th, 0),
/// th = k z - w t. Throws std::invalid_argument unless n = (0, 0, n_z > 0).
EmFields analytic_circular_wave(const GridSpec& grid, const KIndex& n, Helicity s, double t,
                                const PhysicalConstants& consts);

/// alpha_+ Psi_left + alpha_- Psi_right at time t. Requires |a+|^2 + |a-|^2 = 1 within 1e-12.
Bispinor elliptic_bispinor(cplx alpha_plus, cplx alpha_minus, const GridSpec& grid, const KIndex& n,
                           double t, const PhysicalConstants& consts);

enum class RunRepresentation { LP, RS, BB, Fields };

struct ConservationRecord {
    double t;
    double h_lp;
    double k_bb;
    double k_rs;
    double e_tot;
    double div_residual;
};

/// Snapshots of one representation at strictly increasing times plus the conserved-quantity log.
/// LP snapshots hold psi, BB hold F_BB, RS and Fields hold F_RS.
struct EvolutionRun {
    RunRepresentation representation;
    VectorFieldC initial;
    std::vector<double> times;
    std::vector<VectorFieldC> snapshots;
    std::vector<ConservationRecord> log;
};

/// Evolves `initial` step by step: times t_j = j dt for j = 0..steps.
EvolutionRun run_evolution(const VectorFieldC& initial, RunRepresentation rep, double dt, int steps,
                           const PhysicalConstants& consts);

/// E and B carried by a snapshot of the given representation.
EmFields snapshot_fields(const VectorFieldC& snapshot, RunRepresentation rep, const PhysicalConstants& consts);
ConservationRecord conserved_quantities(const VectorFieldC& snapshot, RunRepresentation rep, double t,
                                        const PhysicalConstants& consts);

/// Max relative drift |Q(t) - Q(0)| / |Q(0)| of each logged quantity, order H, K_BB, K_RS, E_tot.
std::array<double, 4> max_relative_drift(const EvolutionRun& run);

struct MaxwellResiduals {
    double h = 0.0;
    double ampere = 0.0;   ///< ||dE/dt - c^2 curl B||
    double faraday = 0.0;  ///< ||dB/dt + curl E||
    double div_e = 0.0;
    double div_b = 0.0;
    double scale = 0.0;    ///< ||dE/dt|| + c ||dB/dt||, for relative reporting
};

/// Centered-difference residuals, max over interior snapshots. Needs >= 3 equally spaced snapshots.
MaxwellResiduals maxwell_residuals(const EvolutionRun& run, const PhysicalConstants& consts);

struct ResidualConvergence {
    std::array<MaxwellResiduals, 3> levels;  ///< h, h/2, h/4
    std::array<double, 2> order;             ///< log2 ratios of combined residuals
};

/// Runs three 3-snapshot BB evolutions around t0 with steps h, h/2, h/4.
ResidualConvergence maxwell_convergence(const VectorFieldC& f_bb, double t0, double h,
                                        const PhysicalConstants& consts);

/// 2 pi / (64 w_max), w_max over modes carrying more than 1e-12 of the peak spectral amplitude.
double default_residual_step(const VectorFieldC& f, const PhysicalConstants& consts);

} // namespace maxfock
