#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace maxfock;
using namespace maxfock::fock;

namespace {

const PhysicalConstants kOdd{0.7, 1.9, 2.3};

std::vector<cplx> random_eta(std::size_t m, std::uint64_t seed) {
    CounterRng rng(seed);
    std::vector<cplx> eta(m);
    for (auto& v : eta) v = {rng.normal(), rng.normal()};
    return eta;
}

double max_diff(const SparseMatrix& a, const Eigen::MatrixXcd& b) {
    return (Eigen::MatrixXcd(a) - b).cwiseAbs().maxCoeff();
}

SpacePtr space(std::size_t modes, int n_max, Representation rep = Representation::LP,
               const PhysicalConstants& consts = kOdd) {
    return make_space(ModeBasis::lowest(testing::grid8(), modes, consts), n_max, rep);
}

} // namespace

TEST_SUITE("fock") {

TEST_CASE("occupation basis ordering and size") {
    const auto s = space(4, 3);
    CHECK(s->dimension() == 35);
    CHECK(s->occupation(0) == Occupation{0, 0, 0, 0});
    CHECK(s->occupation(1) == Occupation{1, 0, 0, 0});
    CHECK(s->occupation(4) == Occupation{0, 0, 0, 1});
    CHECK(s->occupation(5) == Occupation{2, 0, 0, 0});
    CHECK(s->shell_end(0) == 1);
    CHECK(s->shell_end(2) == 15);
    CHECK(space(6, 4)->dimension() == 210);
}

TEST_CASE("mode basis validation") {
    const auto& g = testing::grid8();
    const std::vector<ModeKey> dup{{{1, 0, 0}, Helicity::Plus}, {{1, 0, 0}, Helicity::Plus}};
    CHECK_THROWS_AS(ModeBasis(g, dup, kOdd), std::invalid_argument);
    const std::vector<ModeKey> zero{{{0, 0, 0}, Helicity::Plus}};
    CHECK_THROWS_AS(ModeBasis(g, zero, kOdd), ZeroModeRequest);
    const std::vector<ModeKey> nyq{{{-4, 0, 0}, Helicity::Plus}};
    CHECK_THROWS_AS(ModeBasis(g, nyq, kOdd), NyquistRequest);
    for (double w : ModeBasis::lowest(g, 6, kOdd).omegas()) CHECK(w > 0.0);
}

TEST_CASE("creation rules") {
    const auto s = space(3, 3);
    const std::vector<cplx> e1{1.0, 0.0, 0.0};
    const auto c = creation(s, e1);
    const auto one = c.apply(vacuum(s));
    CHECK(std::abs(one.amplitude({1, 0, 0}) - 1.0) < 1e-15);
    const auto two = c.apply(one);
    CHECK(std::abs(two.amplitude({2, 0, 0}) - std::sqrt(2.0)) < 1e-15);
    CHECK(annihilation(s, e1).apply(vacuum(s)).norm() == 0.0);
    CHECK_THROWS_AS(creation(s, std::vector<cplx>{0.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(creation(s, std::vector<cplx>{1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("creation matches the symmetric tensor oracle") {
    const auto s = space(2, 3);
    const oracle::TensorFock tf(2, 3);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto eta = random_eta(2, seed);
        CHECK(max_diff(creation(s, eta).matrix(), tf.creation(*s, eta)) <= 1e-13);
        CHECK(max_diff(annihilation(s, eta).matrix(), tf.creation(*s, eta).adjoint()) <= 1e-13);
    }
    const auto s3 = space(3, 3);
    const oracle::TensorFock tf3(3, 3);
    const auto eta = random_eta(3, 7);
    CHECK(max_diff(creation(s3, eta).matrix(), tf3.creation(*s3, eta)) <= 1e-13);
    // general eta is the sum of single-mode operators
    SparseMatrix sum(creation(s3, eta).matrix().rows(), creation(s3, eta).matrix().cols());
    for (std::size_t j = 0; j < 3; ++j) {
        std::vector<cplx> ej(3, 0.0);
        ej[j] = 1.0;
        sum += eta[j] * creation(s3, ej).matrix();
    }
    CHECK(max_diff(creation(s3, eta).matrix(), Eigen::MatrixXcd(sum)) <= 1e-14);
}

TEST_CASE("adjointness is exact") {
    const auto s = space(4, 3);
    const auto eta = random_eta(4, 3);
    const SparseMatrix a = annihilation(s, eta).matrix();
    const SparseMatrix c = creation(s, eta).matrix().adjoint();
    CHECK((Eigen::MatrixXcd(a) - Eigen::MatrixXcd(c)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(annihilation(s, eta).tag() == OperatorTag::Annihilation);
}

TEST_CASE("commutators") {
    const auto s = space(4, 3);
    std::vector<cplx> e1(4, 0.0), e2(4, 0.0);
    e1[0] = 1.0;
    e2[1] = 1.0;
    CHECK(commutator_defect(s, e1, e2) <= 1e-12);
    CHECK(commutator_defect(s, e1, e1) <= 1e-12);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto a = random_eta(4, seed);
        const auto b = random_eta(4, seed + 100);
        CHECK(commutator_defect(s, a, b) <= 1e-12);
        const auto ca = commutator(annihilation(s, a), annihilation(s, b));
        const auto cc = commutator(creation(s, a), creation(s, b));
        CHECK(Eigen::MatrixXcd(ca.matrix()).cwiseAbs().maxCoeff() <= 1e-13);
        CHECK(Eigen::MatrixXcd(cc.matrix()).cwiseAbs().maxCoeff() <= 1e-13);
    }
}

TEST_CASE("dGamma and the Hamiltonians") {
    const auto lp = space(4, 3, Representation::LP);
    const auto bb = lp->twin();
    const auto& basis = lp->basis();
    const auto omegas = basis.omegas();
    const auto dg = dgamma(lp, omegas, kOdd);
    CHECK(std::abs(dg.expectation(vacuum(lp), vacuum(lp))) == 0.0);
    const std::size_t i10 = lp->index({1, 0, 0, 0});
    CHECK(std::abs(Eigen::MatrixXcd(dg.matrix())(i10, i10) - kOdd.hbar * omegas[0]) < 1e-14);
    const std::size_t i11 = lp->index({1, 1, 0, 0});
    CHECK(std::abs(Eigen::MatrixXcd(dg.matrix())(i11, i11) - kOdd.hbar * (omegas[0] + omegas[1])) < 1e-13);

    Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(4, 4);
    for (int j = 0; j < 4; ++j) T(j, j) = kOdd.hbar * omegas[j];
    const oracle::TensorFock tf(4, 3);
    CHECK(max_diff(dg.matrix(), tf.dgamma(*lp, T)) <= 1e-13);

    const auto h_lp = hamiltonian(lp);
    const auto h_bb = hamiltonian(bb);
    CHECK(max_diff(h_lp.matrix(), Eigen::MatrixXcd(h_bb.matrix())) <= 1e-13);
    CHECK(max_diff(h_lp.matrix(), Eigen::MatrixXcd(dg.matrix())) <= 1e-13);
    const auto comm = commutator(h_lp, number_operator(lp));
    CHECK(Eigen::MatrixXcd(comm.matrix()).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("single photon states") {
    const auto s = space(4, 2);
    const auto eta = random_eta(4, 5);
    const auto one = single_photon(s, eta);
    for (std::size_t j = 0; j < 4; ++j) {
        Occupation occ(4, 0);
        occ[j] = 1;
        CHECK(std::abs(one.amplitude(occ) - eta[j]) < 1e-15);
    }
    const auto h = hamiltonian(s);
    double ref = 0.0;
    const auto w = s->basis().omegas();
    for (std::size_t j = 0; j < 4; ++j) ref += std::norm(eta[j]) * kOdd.hbar * w[j];
    CHECK(h.expectation(one, one).real() == doctest::Approx(ref).epsilon(1e-13));

    // <eta|H|eta'> = hbar <eta|Omega eta'> from the classical fields
    const auto eta2 = random_eta(4, 6);
    const auto two = single_photon(s, eta2);
    VectorFieldC f1(s->basis().grid()), f2(s->basis().grid());
    for (std::size_t j = 0; j < 4; ++j) {
        f1 += s->basis().lp_field(j) * eta[j];
        f2 += s->basis().lp_field(j) * eta2[j];
    }
    const cplx classical = kOdd.hbar * inner_lp(f1, omega_pow(f2, 1.0, kOdd));
    CHECK(std::abs(h.expectation(one, two) - classical) <= 1e-12 * std::abs(classical));
    CHECK(std::abs(lp_coefficients(s->basis(), f1)[2] - eta[2]) <= 1e-12 * std::abs(eta[2]));
}

TEST_CASE("lifted isomorphism") {
    const auto lp = space(3, 3);
    const auto bb = lp->twin();
    CHECK(lift_iso(vacuum(lp), LiftDirection::LpToBb).amplitudes() == vacuum(bb).amplitudes());
    CHECK(*lift_iso(vacuum(lp), LiftDirection::LpToBb).space() == *bb);
    CHECK_THROWS_AS(lift_iso(vacuum(lp), LiftDirection::BbToLp), GridMismatch);

    CounterRng rng(1);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(lp->dimension()));
    for (auto& x : v) x = {rng.normal(), rng.normal()};
    const FockState s(lp, v);
    Eigen::VectorXcd u(static_cast<Eigen::Index>(lp->dimension()));
    for (auto& x : u) x = {rng.normal(), rng.normal()};
    const FockState t(lp, u);
    const auto ls = lift_iso(s, LiftDirection::LpToBb);
    const auto lt = lift_iso(t, LiftDirection::LpToBb);
    CHECK(std::abs(inner(ls, lt) - inner(s, t)) <= 1e-13 * std::abs(inner(s, t)));

    // lift(B^dag_eta s) = C^dag_{coefficients of I eta} lift(s)
    const auto& basis = lp->basis();
    const auto eta = random_eta(3, 9);
    VectorFieldC psi(basis.grid());
    for (std::size_t j = 0; j < 3; ++j) psi += basis.lp_field(j) * eta[j];
    const auto coeffs = bb_coefficients(basis, iso_i(psi, basis.constants()));
    const auto lhs = lift_iso(creation(lp, eta).apply(s), LiftDirection::LpToBb);
    const auto rhs = creation(bb, coeffs).apply(ls);
    CHECK((lhs.amplitudes() - rhs.amplitudes()).norm() <= 1e-12 * lhs.norm());

    const auto single = single_photon(lp, std::vector<cplx>{0.0, 1.0, 0.0});
    const auto lifted = lift_iso(single, LiftDirection::LpToBb);
    CHECK(std::abs(lifted.amplitude({0, 1, 0}) - 1.0) < 1e-15);
    CHECK(lift_iso(lift_iso(s, LiftDirection::LpToBb), LiftDirection::BbToLp).amplitudes() == s.amplitudes());

    const auto h = lift_iso(hamiltonian(lp), LiftDirection::LpToBb);
    CHECK(max_diff(h.matrix(), Eigen::MatrixXcd(hamiltonian(bb).matrix())) <= 1e-13);
}

TEST_CASE("smeared field operators under the isomorphism") {
    const auto lp = space(4, 2);
    const auto bb = lp->twin();
    const auto& basis = lp->basis();
    const auto& consts = basis.constants();
    const auto f = random_state(basis.grid(), 17);
    const auto lhs = lift_iso(smeared_lp_field(lp, f), LiftDirection::LpToBb);
    const auto rhs = cplx(0, -1.0 / std::sqrt(consts.hbar)) * smeared_bb_field(bb, omega_pow(f, -0.5, consts));
    const double scale = Eigen::MatrixXcd(lhs.matrix()).cwiseAbs().maxCoeff();
    CHECK(max_diff(lhs.matrix(), Eigen::MatrixXcd(rhs.matrix())) <= 1e-12 * scale);
    CHECK_THROWS_AS(smeared_bb_field(lp, f), GridMismatch);
}

TEST_CASE("state serialization round trip") {
    const auto s = space(3, 2, Representation::BB);
    const auto st = single_photon(s, random_eta(3, 2));
    std::stringstream ss;
    write_state(ss, st);
    const auto back = read_state(ss);
    CHECK(*back.space() == *s);
    CHECK(back.amplitudes() == st.amplitudes());

    std::stringstream bad("format_version: 1\nkind: fock_state\n\n");
    CHECK_THROWS_AS(read_state(bad), FormatError);
}

TEST_CASE("operands from different spaces are rejected") {
    const auto a = space(3, 2);
    const auto b = space(4, 2);
    CHECK_THROWS_AS(inner(vacuum(a), vacuum(b)), GridMismatch);
    CHECK_THROWS_AS(identity(a) * identity(b), GridMismatch);
}

}
