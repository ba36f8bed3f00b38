#include <doctest.h>

#include "helpers.hpp"

using namespace maxfock;

namespace {
const PhysicalConstants kOdd{0.7, 1.9, 2.3};
}

TEST_SUITE("fidelity") {

TEST_CASE("basic patterns") {
    const auto& g = testing::grid8();
    const auto f = random_state(g, 1);
    CHECK(fidelity_bb(f, f * cplx(0.3, -2.0), kOdd) == doctest::Approx(1.0).epsilon(1e-12));
    const auto p = random_helicity_state(g, 2, Helicity::Plus);
    const auto m = random_helicity_state(g, 3, Helicity::Minus);
    CHECK(fidelity_bb(p, m, kOdd) <= 1e-24);
    CHECK_THROWS_AS(fidelity_bb(f, VectorFieldC(g), kOdd), ZeroStateFidelity);
    CHECK_THROWS_AS(fidelity_lp(VectorFieldC(g), f), ZeroStateFidelity);
}

TEST_CASE("representation independence") {
    const auto& g = testing::grid8();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto psi1 = random_state(g, seed);
        const auto psi2 = random_state(g, seed + 50);
        const auto f1 = iso_i(psi1, kOdd);
        const auto f2 = iso_i(psi2, kOdd);
        const double fb = fidelity_bb(f1, f2, kOdd);
        const double fm = fidelity_m(bb_momentum(f1, kOdd), bb_momentum(f2, kOdd));
        const double fl = fidelity_lp(psi1, psi2);
        CHECK(std::abs(fb - fm) <= 1e-12);
        CHECK(std::abs(fb - fl) <= 1e-12);
        CHECK(fb >= 0.0);
        CHECK(fb <= 1.0);
        const double fe = fidelity_bb(evolve(f1, 0.7, kOdd), evolve(f2, 0.7, kOdd), kOdd);
        CHECK(std::abs(fe - fb) <= 1e-12);
    }
}

TEST_CASE("unweighted fidelity") {
    const auto& g = testing::grid8();
    const auto ce = two_frequency_counterexample(g);
    CHECK(fidelity_bb(ce.f1, ce.f2, kOdd) == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
    CHECK(fidelity_unweighted(ce.f1, ce.f2) <= 1e-24);
    const auto phi = plane_wave_mode(g, {1, 1, 0}, Helicity::Plus);
    const auto phi2 = phi * cplx(0.0, 2.0);
    CHECK(fidelity_unweighted(phi, phi2) == doctest::Approx(fidelity_bb(phi, phi2, kOdd)).epsilon(1e-12));
}

TEST_CASE("energy density") {
    const auto& g = testing::grid8();
    const auto wave = analytic_circular_wave(g, {0, 0, 1}, Helicity::Plus, 0.2, kOdd);
    const auto density = energy_density(bispinor_split(bb_vector(wave, kOdd)));
    double lo = 1e300, hi = 0.0;
    for (double v : density.values()) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(hi - lo <= 1e-12 * hi);

    const EmFields f{random_real_state(g, 4), random_real_state(g, 5)};
    const auto d = energy_density(bispinor_split(bb_vector(f, kOdd)));
    for (double v : d.values()) CHECK(v >= 0.0);
    CHECK(integrate(d) == doctest::Approx(total_energy(f, kOdd)).epsilon(1e-12));

    const Bispinor zero{VectorFieldC(g), VectorFieldC(g)};
    CHECK(integrate(energy_density(zero)) == 0.0);
}

}
