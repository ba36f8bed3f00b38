#include <doctest.h>

#include <sstream>

#include "helpers.hpp"

using namespace maxfock;

namespace {
const PhysicalConstants kOdd{0.7, 1.9, 2.3};
}

TEST_SUITE("maps") {

TEST_CASE("retained modes exclude zero and Nyquist entries") {
    const auto& g = testing::grid8();
    const auto& modes = *retained_modes(g);
    CHECK(modes.size() == 2 * (7 * 7 * 7 - 1));
    const ModeAmplitudes a(g, AmplitudeKind::Momentum);
    for (std::size_t i = 0; i < modes.size(); i += 37) CHECK(a.find(modes[i]) == i);
    CHECK(a.find({{0, 0, 0}, Helicity::Plus}) == a.size());
    CHECK(a.find({{-4, 0, 1}, Helicity::Plus}) == a.size());
}

TEST_CASE("map_m") {
    const auto& g = testing::grid8();
    const KIndex n{2, -1, 0};
    const auto z = map_m(plane_wave_mode(g, n, Helicity::Plus));
    const auto idx = z.find({n, Helicity::Plus});
    for (std::size_t i = 0; i < z.size(); ++i) CHECK(std::abs(z[i] - (i == idx ? 1.0 : 0.0)) < 1e-13);

    const auto psi = random_state(g, 1);
    const auto psi2 = random_state(g, 2);
    CHECK(relative_error(map_m_inverse(map_m(psi)), psi) <= 1e-13);
    CHECK(std::abs(inner(map_m(psi), map_m(psi2)) - inner_lp(psi, psi2)) <= 1e-12 * norm_lp(psi) * norm_lp(psi2));
}

TEST_CASE("iso_i") {
    const auto& g = testing::grid8();
    const KIndex n{1, 0, -3};
    const auto phi = plane_wave_mode(g, n, Helicity::Minus);
    CHECK(relative_error(iso_i(phi, kOdd), bb_basis_mode(g, n, Helicity::Minus, kOdd)) <= 1e-13);
    CHECK(max_abs(iso_i(VectorFieldC(g), kOdd)) == 0.0);

    const auto psi = random_state(g, 3);
    const auto psi2 = random_state(g, 4);
    CHECK(relative_error(iso_i_inverse(iso_i(psi, kOdd), kOdd), psi) <= 1e-13);
    CHECK(std::abs(inner_bb(iso_i(psi, kOdd), iso_i(psi2, kOdd), kOdd) - inner_lp(psi, psi2)) <=
          1e-12 * norm_lp(psi) * norm_lp(psi2));

    // physics route: potentials -> psi -> F_BB against E, B -> F_BB
    const CanonicalPairLP pair{random_real_state(g, 5), random_real_state(g, 6)};
    const auto lp = lp_from_potentials(pair, kOdd);
    const auto fields = fields_from_lp(lp, kOdd);
    CHECK(relative_error(iso_i(lp, kOdd), bb_vector({fields.E, fields.B}, kOdd)) <= 1e-12);
}

TEST_CASE("BB basis amplitudes equal the momentum amplitudes of the LP preimage") {
    const auto& g = testing::grid8();
    const auto f_bb = random_state(g, 7);
    const auto zbb = bb_basis_amplitudes(f_bb, kOdd);
    const auto zm = map_m(iso_i_inverse(f_bb, kOdd));
    double err = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < zbb.size(); ++i) {
        err = std::max(err, std::abs(zbb[i] - zm[i]));
        scale = std::max(scale, std::abs(zm[i]));
    }
    CHECK(err <= 1e-12 * scale);
    // direct check against <g|F>_BB for one mode
    const auto& m = zbb.modes()[10];
    const cplx direct = inner_bb(bb_basis_mode(g, m.n, m.sigma, kOdd), f_bb, kOdd);
    CHECK(std::abs(direct - zbb[10]) <= 1e-12 * scale);
}

TEST_CASE("BB momentum map") {
    const auto& g = testing::grid8();
    const KIndex n{0, 2, 1};
    const auto fm = bb_momentum(bb_basis_mode(g, n, Helicity::Plus, kOdd), kOdd);
    const auto idx = fm.find({n, Helicity::Plus});
    for (std::size_t i = 0; i < fm.size(); ++i) {
        if (i != idx) CHECK(std::abs(fm[i]) < 1e-12 * std::abs(fm[idx]));
    }
    const auto a = random_state(g, 8);
    const auto b = random_state(g, 9);
    CHECK(relative_error(bb_momentum_inverse(bb_momentum(a, kOdd), kOdd), a) <= 1e-13);
    const cplx lhs = inner(bb_momentum(a, kOdd), bb_momentum(b, kOdd));
    const cplx rhs = inner_bb(a, b, kOdd);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::sqrt(inner_bb(a, a, kOdd).real() * inner_bb(b, b, kOdd).real()));
}

TEST_CASE("maps are linear") {
    const auto& g = testing::grid8();
    const auto f = random_state(g, 10);
    const auto h = random_state(g, 11);
    const cplx a(0.4, 1.2), b(-2.0, 0.1);
    const auto combo = f * a + h * b;
    CHECK(relative_error(iso_i(combo, kOdd), iso_i(f, kOdd) * a + iso_i(h, kOdd) * b) <= 1e-13);
    const auto zc = map_m(combo), zf = map_m(f), zh = map_m(h);
    double err = 0.0;
    for (std::size_t i = 0; i < zc.size(); ++i) err = std::max(err, std::abs(zc[i] - a * zf[i] - b * zh[i]));
    CHECK(err <= 1e-13 * 10);
}

TEST_CASE("amplitude CSV round trip") {
    const auto& g = testing::grid8();
    const auto z = map_m(random_state(g, 12));
    std::stringstream ss;
    write_amplitudes_csv(ss, z);
    const auto back = read_amplitudes_csv(ss, g, AmplitudeKind::Momentum);
    for (std::size_t i = 0; i < z.size(); ++i) CHECK(back[i] == z[i]);

    std::stringstream bad("kx_index,ky_index,kz_index,sigma,re,im\n0,0,0,1,1,0\n");
    CHECK_THROWS_AS(read_amplitudes_csv(bad, g, AmplitudeKind::Momentum), FormatError);
    std::stringstream bad_header("a,b\n");
    CHECK_THROWS_AS(read_amplitudes_csv(bad_header, g, AmplitudeKind::Momentum), FormatError);
}

TEST_CASE("zero-mode content is rejected by the inverse maps") {
    const auto& g = testing::grid8();
    VectorFieldC f = random_state(g, 13);
    for (auto& v : f) v += Vec3c{{0.5, 0.0, 0.0}};
    CHECK_THROWS_AS(iso_i_inverse(f, kOdd), NegativePowerOnZeroMode);
    CHECK_THROWS_AS(bb_momentum(f, kOdd), NegativePowerOnZeroMode);
}

}
