#include <doctest.h>

#include "helpers.hpp"

using namespace maxfock;

namespace {

const PhysicalConstants kOdd{0.7, 1.9, 2.3};

EmFields random_fields(const GridSpec& g, std::uint64_t seed) {
    return {random_real_state(g, seed), random_real_state(g, seed + 1000)};
}

} // namespace

TEST_SUITE("representations") {

TEST_CASE("LP field round trip through potentials") {
    const auto& g = testing::grid8();
    for (const auto& consts : {PhysicalConstants{}, kOdd}) {
        const CanonicalPairLP pair{random_real_state(g, 1), random_real_state(g, 2)};
        const auto psi = lp_from_potentials(pair, consts);
        const auto back = fields_from_lp(psi, consts);
        CHECK(relative_error(back.A, pair.A) <= 1e-12);
        VectorFieldR minus_pi = pair.Pi;
        minus_pi *= -1.0 / consts.eps0;
        CHECK(relative_error(back.E, minus_pi) <= 1e-12);
        CHECK(relative_error(back.B, curl(pair.A)) <= 1e-12);

        // A = c Omega^{-1} Lambda B
        VectorFieldR a2 = omega_pow(helicity(back.B), -1.0, consts);
        a2 *= consts.c;
        CHECK(relative_error(a2, back.A) <= 1e-12);

        // Hamilton function in canonical variables
        const double h = hamilton_lp(psi, consts);
        const double ref = inner_lp(pair.Pi, pair.Pi) / (2.0 * consts.eps0) +
                           consts.eps0 / 2.0 * inner_lp(pair.A, omega_pow(pair.A, 2.0, consts));
        CHECK(h == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("LP field from a cosine mode with zero momentum") {
    const auto& g = testing::grid8();
    const PhysicalConstants consts = kOdd;
    const KIndex n{0, 1, 1};
    VectorFieldR A = real_part(plane_wave_mode(g, n, Helicity::Plus));
    const CanonicalPairLP pair{A, VectorFieldR(g)};
    const auto psi = lp_from_potentials(pair, consts);
    const double w = consts.c * std::sqrt(norm2(g.k_vector(n)));
    auto expected = to_complex(A);
    expected *= cplx(std::sqrt(consts.eps0 * w / (2.0 * consts.hbar)));
    CHECK(relative_error(psi, expected) <= 1e-12);
}

TEST_CASE("fields from a random LP field are real") {
    const auto psi = random_state(testing::grid8(), 3);
    CHECK_NOTHROW(fields_from_lp(psi, kOdd));
    const auto zero = fields_from_lp(VectorFieldC(testing::grid8()), kOdd);
    CHECK(max_abs(zero.A) == 0.0);
    CHECK(max_abs(zero.B) == 0.0);
}

TEST_CASE("BB and RS vectors round trip") {
    const auto& g = testing::grid8();
    const auto f = random_fields(g, 4);
    const auto f_bb = bb_vector(f, kOdd);
    const auto back = fields_from_bb(f_bb, kOdd);
    CHECK(relative_error(back.E, f.E) <= 1e-12);
    CHECK(relative_error(back.B, f.B) <= 1e-12);
    const auto rs = fields_from_rs(rs_vector(f, kOdd), kOdd);
    CHECK(relative_error(rs.E, f.E) <= 1e-12);
    CHECK(relative_error(rs.B, f.B) <= 1e-12);

    const EmFields zero{VectorFieldR(g), VectorFieldR(g)};
    CHECK(max_abs(bb_vector(zero, kOdd)) == 0.0);
}

TEST_CASE("canonical RS and BB variables") {
    const auto f = random_fields(testing::grid8(), 5);
    const auto rs = rs_canonical(f, kOdd);
    const auto bb = bb_canonical(f, kOdd);
    CHECK(relative_error(bb.P, helicity(rs.P)) <= 1e-12);
    // F_RS = (Q + i P) / sqrt2
    auto q = to_complex(rs.Q);
    auto p = to_complex(rs.P);
    p *= cplx(0, 1);
    auto combined = q + p;
    combined *= cplx(1.0 / std::sqrt(2.0));
    CHECK(relative_error(combined, rs_vector(f, kOdd)) <= 1e-13);
}

TEST_CASE("bispinor split against the RS helicity parts") {
    const auto f = random_fields(testing::grid8(), 6);
    const auto f_bb = bb_vector(f, kOdd);
    const auto f_rs = rs_vector(f, kOdd);
    const auto bs = bispinor_split(f_bb);
    CHECK(relative_error(bispinor_join(bs), f_bb) <= 1e-13);
    CHECK(relative_error(bs.upper, project_helicity(f_rs, Helicity::Plus)) <= 1e-12);
    CHECK(relative_error(bs.lower, conj(project_helicity(f_rs, Helicity::Minus))) <= 1e-12);
    CHECK(relative_error(helicity(bs.upper), bs.upper) <= 1e-12);
    CHECK(relative_error(helicity(bs.lower), bs.lower * cplx(-1.0)) <= 1e-12);

    const auto pure = plane_wave_mode(testing::grid8(), {1, 1, 1}, Helicity::Minus);
    const auto one_sided = bispinor_split(pure);
    CHECK(norm_lp(one_sided.upper) <= 1e-13);
}

TEST_CASE("BB scalar product") {
    const auto& g = testing::grid8();
    const auto gk = bb_basis_mode(g, {1, 2, 0}, Helicity::Plus, kOdd);
    CHECK(std::abs(inner_bb(gk, gk, kOdd) - 1.0) <= 1e-12);
    const auto a = random_helicity_state(g, 7, Helicity::Plus);
    const auto b = random_helicity_state(g, 8, Helicity::Minus);
    CHECK(std::abs(inner_bb(a, b, kOdd)) <= 1e-12 * std::sqrt(inner_bb(a, a, kOdd).real() * inner_bb(b, b, kOdd).real()));
    CHECK(std::abs(inner_bb(a, b, kOdd) - std::conj(inner_bb(b, a, kOdd))) <= 1e-14);
    CHECK(inner_bb(a, a, kOdd).real() > 0.0);
}

TEST_CASE("functionals: sign structure and energy chain") {
    const auto& g = testing::grid8();
    const PhysicalConstants consts = kOdd;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto plus = random_helicity_state(g, seed, Helicity::Plus);
        const auto minus = random_helicity_state(g, seed, Helicity::Minus);
        CHECK(k_rs(plus, consts) > 0.0);
        CHECK(k_rs(minus, consts) < 0.0);
        CHECK(std::abs(k_rs(plus, consts)) == doctest::Approx(k_bb(plus, consts)).epsilon(1e-12));
        CHECK(std::abs(k_rs(minus, consts)) == doctest::Approx(k_bb(minus, consts)).epsilon(1e-12));

        const auto f = random_fields(g, seed);
        const auto f_rs = rs_vector(f, consts);
        CHECK(k_rs(f_rs, consts) == doctest::Approx(k_rs_helicity_form(f_rs, consts)).epsilon(1e-11));
        const double e = total_energy(f, consts);
        const auto f_bb = bb_vector(f, consts);
        const auto psi = iso_i_inverse(f_bb, consts);
        CHECK(hamilton_lp(psi, consts) == doctest::Approx(e).epsilon(1e-12));
        CHECK(inner_lp(f_bb, f_bb).real() == doctest::Approx(e).epsilon(1e-12));
        // K_BB is the BB Hamilton function, hbar <psi|Omega^2 psi>, not the energy
        const double kbb = consts.hbar * inner_lp(psi, omega_pow(psi, 2.0, consts)).real();
        CHECK(k_bb(f_bb, consts) == doctest::Approx(kbb).epsilon(1e-12));
        CHECK(k_bb(f_bb, consts) >= 0.0);
    }
    const VectorFieldC zero(g);
    CHECK(k_bb(zero, consts) == 0.0);
    CHECK(k_rs(zero, consts) == 0.0);
    CHECK(hamilton_lp(zero, consts) == 0.0);
}

TEST_CASE("harmonic oscillator variables") {
    const auto& g = testing::grid8();
    const PhysicalConstants consts = kOdd;
    const auto psi = random_state(g, 11);
    const auto z = map_m(psi);
    std::vector<double> omega;
    std::vector<int> signs;
    for (const auto& m : z.modes()) {
        omega.push_back(consts.c * std::sqrt(norm2(g.k_vector(m.n))));
        signs.push_back(sign(m.sigma));
    }
    const auto vars = real_mode_split(z.values(), omega, ModeVariant::LP, consts);
    const auto back = real_mode_join(vars, ModeVariant::LP, consts);
    double err = 0.0;
    for (std::size_t i = 0; i < back.size(); ++i) err = std::max(err, std::abs(back[i] - z[i]));
    CHECK(err <= 1e-14 * 10);
    CHECK(oscillator_energy(vars, consts) == doctest::Approx(hamilton_lp(psi, consts)).epsilon(1e-12));

    // RS variant: signed energy gives K_RS
    const auto f_rs = random_state(g, 12);
    const auto zr = rs_amplitudes(f_rs);
    const auto rv = real_mode_split(zr.values(), omega, ModeVariant::RS, consts);
    CHECK(oscillator_energy(rv, consts, signs) == doctest::Approx(k_rs(f_rs, consts)).epsilon(1e-12));

    const std::vector<cplx> real_z{1.5, -0.5};
    const std::vector<double> w{1.0, 2.0};
    const auto rz = real_mode_split(real_z, w, ModeVariant::LP, consts);
    CHECK(rz.p[0] == 0.0);
    const std::vector<cplx> imag_z{cplx(0, 1.5)};
    CHECK(real_mode_split(imag_z, std::vector<double>{1.0}, ModeVariant::LP, consts).q[0] == 0.0);
}

}
