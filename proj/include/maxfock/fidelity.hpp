#pragma once

#include "maxfock/constants.hpp"
#include "maxfock/field.hpp"
#include "maxfock/maps.hpp"
#include "maxfock/representations.hpp"

namespace maxfock {

/// |<F1|F2>_BB|^2 / (<F1|F1>_BB <F2|F2>_BB). Throws ZeroStateFidelity when a BB norm^2 < 1e-14.
double fidelity_bb(const VectorFieldC& f1, const VectorFieldC& f2, const PhysicalConstants& consts);
/// Same with the weighted BB momentum product.
double fidelity_m(const ModeAmplitudes& f1, const ModeAmplitudes& f2);
/// Fidelity of two LP fields with <.|.>_LP.
double fidelity_lp(const VectorFieldC& psi1, const VectorFieldC& psi2);
/// Fidelity of two BB fields with the unweighted product int F1* . F2.
double fidelity_unweighted(const VectorFieldC& f1, const VectorFieldC& f2);

/// |upper|^2 + |lower|^2 per grid point.
ScalarFieldR energy_density(const Bispinor& psi_bb);

/// F1 = phi_{k,+} + phi_{2k,+}, F2 = phi_{k,+} - phi_{2k,+} with k = (1,0,0) dk, so w_2 = 2 w_1.
/// Weighted fidelity 1/9, unweighted fidelity 0.
struct FidelityCounterexample {
    VectorFieldC f1;
    VectorFieldC f2;
};
FidelityCounterexample two_frequency_counterexample(const GridSpec& grid);

} // namespace maxfock
