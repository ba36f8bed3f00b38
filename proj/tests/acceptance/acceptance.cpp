// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.
// Grid N = 16, L = 2 pi, natural units unless a criterion says otherwise.

#include <maxfock/maxfock.hpp>

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

using namespace maxfock;

namespace {

enum class Bound { AtMost, AtLeast, Below, Above };

struct Leg {
    std::string name;
    double value;
    double limit;
    Bound bound = Bound::AtMost;

    [[nodiscard]] bool pass() const {
        if (!std::isfinite(value)) return false;
        switch (bound) {
        case Bound::AtMost: return value <= limit;
        case Bound::AtLeast: return value >= limit;
        case Bound::Below: return value < limit;
        case Bound::Above: return value > limit;
        }
        return false;
    }
    [[nodiscard]] const char* op() const {
        switch (bound) {
        case Bound::AtMost: return "<=";
        case Bound::AtLeast: return ">=";
        case Bound::Below: return "<";
        case Bound::Above: return ">";
        }
        return "?";
    }
};

const GridSpec kGrid(2.0 * std::numbers::pi, 16);
const PhysicalConstants kNat = PhysicalConstants::natural();
constexpr double kInf = std::numeric_limits<double>::infinity();

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

VectorFieldC noise(const GridSpec& g, std::uint64_t seed) {
    CounterRng rng(seed);
    VectorFieldC f(g);
    for (auto& v : f)
        for (auto& x : v.c) x = {rng.normal(), rng.normal()};
    return f;
}

double max_entry(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// ---- criteria ----

std::vector<Leg> eigen_relations() {
    double curl_err = 0.0, hel_err = 0.0, om_err = 0.0;
    for (const auto& m : *retained_modes(kGrid)) {
        const auto phi = plane_wave_mode(kGrid, m.n, m.sigma);
        const double kk = std::sqrt(static_cast<double>(m.n[0] * m.n[0] + m.n[1] * m.n[1] + m.n[2] * m.n[2])) * kGrid.dk();
        const double s = sign(m.sigma);
        const double nphi = norm_lp(phi);
        curl_err = std::max(curl_err, norm_lp(curl(phi) - phi * cplx(s * kk)) / nphi);
        hel_err = std::max(hel_err, norm_lp(helicity(phi) - phi * cplx(s)) / nphi);
        om_err = std::max(om_err, norm_lp(omega_pow(phi, 1.0, kNat) - phi * cplx(kNat.c * kk)) / nphi);
    }
    return {{"curl - (+-|k|)", curl_err, 1e-12}, {"Lambda -+ 1", hel_err, 1e-12}, {"Omega - w_k", om_err, 1e-12}};
}

std::vector<Leg> unitarity() {
    double iso = 0.0, mm = 0.0, bbm = 0.0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto a = random_state(kGrid, 1000 + i);
        const auto b = random_state(kGrid, 2000 + i);
        const cplx ref = oracle::naive_inner(a, b);
        const double scale = std::sqrt(oracle::naive_inner(a, a).real() * oracle::naive_inner(b, b).real());
        const auto ia = iso_i(a, kNat), ib = iso_i(b, kNat);
        iso = std::max(iso, std::abs(inner_bb(ia, ib, kNat) - ref) / scale);
        mm = std::max(mm, std::abs(inner(map_m(a), map_m(b)) - ref) / scale);
        bbm = std::max(bbm, std::abs(inner(bb_momentum(ia, kNat), bb_momentum(ib, kNat)) - ref) / scale);
    }
    return {{"iso_i", iso, 1e-11}, {"map_m", mm, 1e-11}, {"bb_momentum", bbm, 1e-11}};
}

std::vector<Leg> two_route() {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const CanonicalPairLP pair{random_real_state(kGrid, 3000 + 2 * i), random_real_state(kGrid, 3001 + 2 * i)};
        // physical fields from the potentials directly: E = -Pi/eps0, B = curl A
        const EmFields f{pair.Pi * (-1.0 / kNat.eps0), curl(pair.A)};
        worst = std::max(worst, relative_error(iso_i(lp_from_potentials(pair, kNat), kNat), bb_vector(f, kNat)));
    }
    return {{"iso_i(lp) vs bb_vector", worst, 1e-11}};
}

std::vector<Leg> hamiltonian_equivalence() {
    using namespace fock;
    const auto basis = ModeBasis::lowest(kGrid, 4, kNat);
    const auto lp = make_space(basis, 3, Representation::LP);
    const auto bb = lp->twin();
    const Eigen::MatrixXcd h_lp(hamiltonian(lp).matrix());
    const Eigen::MatrixXcd h_bb(hamiltonian(bb).matrix());

    // dGamma(hbar Omega) from the tensor-product definition, with w = c |k| from the lattice
    Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(4, 4);
    for (int j = 0; j < 4; ++j) {
        const auto& n = basis[static_cast<std::size_t>(j)].n;
        T(j, j) = kNat.hbar * kNat.c * kGrid.dk() * std::sqrt(static_cast<double>(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]));
    }
    const oracle::TensorFock tf(4, 3);
    const Eigen::MatrixXcd dg = tf.dgamma(*lp, T);
    return {{"H_LP - H_BB", max_entry(h_lp - h_bb), 1e-13},
            {"H_LP - dGamma", max_entry(h_lp - dg), 1e-13},
            {"H_BB - dGamma", max_entry(h_bb - dg), 1e-13}};
}

std::vector<Leg> commutators() {
    using namespace fock;
    const auto basis = ModeBasis::lowest(kGrid, 4, kNat);
    const auto space = make_space(basis, 3, Representation::BB);
    CounterRng rng(4000);
    auto draw = [&] {
        std::vector<cplx> eta(4);
        for (auto& e : eta) e = {rng.normal(), rng.normal()};
        return eta;
    };
    const oracle::TensorFock tf(4, 3);
    double defect = 0.0, oracle_defect = 0.0;
    const auto sub = static_cast<Eigen::Index>(space->shell_end(2));
    for (int i = 0; i < 50; ++i) {
        const auto a = draw(), b = draw();
        defect = std::max(defect, commutator_defect(space, a, b));
        if (i < 5) {
            // the same contract from the tensor oracle's creation operators
            const Eigen::MatrixXcd ca = tf.creation(*space, a), cb = tf.creation(*space, b);
            cplx ab = 0.0;
            for (int j = 0; j < 4; ++j) ab += std::conj(a[j]) * b[j];
            const Eigen::MatrixXcd comm = ca.adjoint() * cb - cb * ca.adjoint();
            const Eigen::MatrixXcd d = comm.topLeftCorner(sub, sub) - ab * Eigen::MatrixXcd::Identity(sub, sub);
            oracle_defect = std::max(oracle_defect, max_entry(d));
        }
    }
    return {{"[B_A, B^dag_B] - <A|B> (library)", defect, 1e-12}, {"same via tensor oracle", oracle_defect, 1e-12}};
}

std::vector<Leg> sign_structure() {
    double plus_min = kInf, minus_max = -kInf, abs_eq = 0.0;
    for (const auto& m : *retained_modes(kGrid)) {
        const auto phi = plane_wave_mode(kGrid, m.n, m.sigma);
        const double krs = k_rs(phi, kNat);
        if (m.sigma == Helicity::Plus) plus_min = std::min(plus_min, krs);
        else minus_max = std::max(minus_max, krs);
        abs_eq = std::max(abs_eq, rel(std::abs(krs), k_bb(phi, kNat)));
    }
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto p = random_helicity_state(kGrid, 5000 + i, Helicity::Plus);
        const auto n = random_helicity_state(kGrid, 5000 + i, Helicity::Minus);
        const double kp = k_rs(p, kNat), kn = k_rs(n, kNat);
        plus_min = std::min(plus_min, kp);
        minus_max = std::max(minus_max, kn);
        abs_eq = std::max({abs_eq, rel(std::abs(kp), k_bb(p, kNat)), rel(std::abs(kn), k_bb(n, kNat))});
    }
    double kbb_min = kInf;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        // half transverse states, half unstructured noise
        const auto f = i % 2 == 0 ? random_state(kGrid, 6000 + i) : noise(kGrid, 6000 + i);
        kbb_min = std::min(kbb_min, k_bb(f, kNat));
    }
    return {{"min K_RS, + helicity", plus_min, 0.0, Bound::Above},
            {"max K_RS, - helicity", minus_max, 0.0, Bound::Below},
            {"min K_BB, 1000 fields", kbb_min, 0.0, Bound::AtLeast},
            {"| |K_RS| - K_BB | / K_BB", abs_eq, 1e-12}};
}

std::vector<Leg> energy_chain() {
    double lp = 0.0, kbb = 0.0, density = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const CanonicalPairLP pair{random_real_state(kGrid, 7000 + 2 * i), random_real_state(kGrid, 7001 + 2 * i)};
        const EmFields f{pair.Pi * (-1.0 / kNat.eps0), curl(pair.A)};
        const double e = total_energy(f, kNat);
        const auto f_bb = bb_vector(f, kNat);
        lp = std::max(lp, rel(hamilton_lp(lp_from_potentials(pair, kNat), kNat), e));
        kbb = std::max(kbb, rel(k_bb(f_bb, kNat), e));
        density = std::max(density, rel(integrate(energy_density(bispinor_split(f_bb))), e));
    }
    return {{"hamilton_lp vs total_energy", lp, 1e-11},
            {"k_bb(bb_vector) vs total_energy", kbb, 1e-11},
            {"cell-integrated |Psi_BB|^2 vs total_energy", density, 1e-12}};
}

std::vector<Leg> dynamics() {
    std::vector<Leg> legs;
    const auto psi = random_state(kGrid, 8000);
    double drift = 0.0, norm_drift = 0.0;
    for (auto rep : {RunRepresentation::LP, RunRepresentation::BB, RunRepresentation::RS}) {
        VectorFieldC initial = psi;
        if (rep == RunRepresentation::BB) initial = iso_i(psi, kNat);
        if (rep == RunRepresentation::RS) initial = rs_vector(fields_from_bb(iso_i(psi, kNat), kNat), kNat);
        const auto run = run_evolution(initial, rep, 0.05, 100, kNat);
        for (double d : max_relative_drift(run)) drift = std::max(drift, d);
        const double n0 = norm_lp(run.initial);
        for (const auto& s : run.snapshots) norm_drift = std::max(norm_drift, rel(norm_lp(s), n0));
    }
    legs.push_back({"functional drift, 100 steps", drift, 1e-12});
    legs.push_back({"norm drift, 100 steps", norm_drift, 1e-12});

    double equi = 0.0;
    for (std::uint64_t i = 0; i < 10; ++i) {
        const auto a = random_state(kGrid, 8100 + i);
        const double t = 0.73 * static_cast<double>(i + 1);
        equi = std::max(equi, relative_error(iso_i(evolve(a, t, kNat), kNat), evolve(iso_i(a, kNat), t, kNat)));
    }
    legs.push_back({"iso_i o evolve - evolve o iso_i", equi, 1e-13});

    const auto f_bb = iso_i(psi, kNat);
    const auto conv = maxwell_convergence(f_bb, 0.4, default_residual_step(f_bb, kNat), kNat);
    legs.push_back({"Maxwell residual order, random field", std::min(conv.order[0], conv.order[1]), 1.9, Bound::AtLeast});
    const auto wave = bb_vector(analytic_circular_wave(kGrid, {0, 0, 1}, Helicity::Plus, 0.0, kNat), kNat);
    const auto wconv = maxwell_convergence(wave, 0.0, default_residual_step(wave, kNat), kNat);
    legs.push_back({"Maxwell residual order, circular wave", std::min(wconv.order[0], wconv.order[1]), 1.9, Bound::AtLeast});
    return legs;
}

std::vector<Leg> fidelities() {
    double m_gap = 0.0, lp_gap = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto a = random_state(kGrid, 9000 + i);
        const auto b = a * cplx(0.3) + random_state(kGrid, 9500 + i);
        const auto fa = iso_i(a, kNat), fb = iso_i(b, kNat);
        const double f = fidelity_bb(fa, fb, kNat);
        m_gap = std::max(m_gap, std::abs(fidelity_m(bb_momentum(fa, kNat), bb_momentum(fb, kNat)) - f));
        // LP fidelity from the oracle inner product
        const double lp = std::norm(oracle::naive_inner(a, b)) / (oracle::naive_inner(a, a).real() * oracle::naive_inner(b, b).real());
        lp_gap = std::max(lp_gap, std::abs(lp - f));
    }
    const auto ce = two_frequency_counterexample(kGrid);
    const double gap = std::abs(fidelity_unweighted(ce.f1, ce.f2) - fidelity_bb(ce.f1, ce.f2, kNat));
    return {{"|F_m - F_BB|", m_gap, 1e-12}, {"|F_LP - F_BB|", lp_gap, 1e-12}, {"|F'_BB - F_BB|, two-frequency pair", gap, 1e-3, Bound::Above}};
}

std::vector<Leg> kernels() {
    struct Level {
        double neg, pos, comp;
    };
    std::vector<Level> levels;
    KernelOptions strict;
    strict.strict_support = true;
    for (int i = 0; i < 3; ++i) {
        const GridSpec g(8.0 * std::numbers::pi * (1 << i), 32 << i);
        const auto f = gaussian_test_field(g);
        const auto neg = riesz_neg_half(f, kNat, strict);
        levels.push_back({relative_error(neg, omega_pow(f, -0.5, kNat)),
                          relative_error(riesz_pos_half(f, kNat, strict), omega_pow(f, 0.5, kNat)),
                          relative_error(riesz_pos_half(neg, kNat), f)});
        std::printf("    level (%gpi, %d): neg %.10f  pos %.10f  composition %.10f\n", 8.0 * (1 << i), 32 << i,
                    levels.back().neg, levels.back().pos, levels.back().comp);
    }
    auto worst_ratio = [&](double Level::*m) {
        return std::max(levels[1].*m / levels[0].*m, levels[2].*m / levels[1].*m);
    };
    return {{"Omega^-1/2 error at (8pi, 32)", levels[0].neg, 0.1},
            {"Omega^1/2 error at (8pi, 32)", levels[0].pos, 0.1},
            {"composition error at (8pi, 32)", levels[0].comp, 0.1},
            {"Omega^-1/2 successive error ratio", worst_ratio(&Level::neg), 1.0, Bound::Below},
            {"Omega^1/2 successive error ratio", worst_ratio(&Level::pos), 1.0, Bound::Below},
            {"composition successive error ratio", worst_ratio(&Level::comp), 1.0, Bound::Below}};
}

std::vector<Leg> plane_waves() {
    const KIndex n{0, 0, 2};
    const double w = kNat.c * 2.0 * kGrid.dk();
    const double t = 0.3;
    double form = 0.0;
    for (Helicity s : {Helicity::Plus, Helicity::Minus}) {
        const auto bs = bispinor_split(bb_vector(analytic_circular_wave(kGrid, n, s, t, kNat), kNat));
        // e^{i(kz - wt)} eps_s / sqrt(V), built pointwise from the closed form
        const auto pol = polarization(kGrid.k_vector(n));
        const auto& eps = polarization_vector(pol, s);
        VectorFieldC expected(kGrid);
        for (std::size_t p = 0; p < kGrid.size(); ++p) {
            const double th = 2.0 * kGrid.dk() * kGrid.position(p)[2] - w * t;
            expected[p] = eps * (std::polar(1.0, th) / std::sqrt(kGrid.volume()));
        }
        const auto& live = s == Helicity::Plus ? bs.upper : bs.lower;
        const auto& dead = s == Helicity::Plus ? bs.lower : bs.upper;
        form = std::max({form, relative_error(live, expected), norm_lp(dead) / norm_lp(live)});
    }
    const cplx ap = std::polar(0.6, 0.4), am = std::polar(0.8, -1.1);
    const auto ell = elliptic_bispinor(ap, am, kGrid, n, 0.0, kNat);
    const double unit = norm_lp(plane_wave_mode(kGrid, n, Helicity::Plus));
    double norm_err = 0.0;
    for (double tt : {0.0, 0.5, 1.7, 10.0, 123.4}) {
        const auto e = evolve(ell, tt, kNat);
        // |a+(t)|^2 + |a-(t)|^2 read back by projection on the two circular modes
        const cplx a_p = inner_lp(plane_wave_mode(kGrid, n, Helicity::Plus), e.upper) / (unit * unit);
        const cplx a_m = inner_lp(plane_wave_mode(kGrid, n, Helicity::Minus), e.lower) / (unit * unit);
        norm_err = std::max(norm_err, std::abs(std::norm(a_p) + std::norm(a_m) - 1.0));
    }
    return {{"circular waves vs bispinor forms", form, 1e-12}, {"elliptic |a+|^2 + |a-|^2 - 1", norm_err, 1e-12}};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<std::vector<Leg>()> run;
    };
    const Criterion criteria[] = {
        {1, "eigen-relations of every retained mode", eigen_relations},
        {2, "isomorphism unitarity, 200 pairs", unitarity},
        {3, "two-route consistency, 100 seeds", two_route},
        {4, "Hamiltonian equivalence, M=4, n_max=3", hamiltonian_equivalence},
        {5, "commutator contract, 50 pairs", commutators},
        {6, "sign structure", sign_structure},
        {7, "energy chain, 100 seeds", energy_chain},
        {8, "dynamics", dynamics},
        {9, "fidelity", fidelities},
        {10, "real-space kernels", kernels},
        {11, "plane-wave catalog", plane_waves},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const auto legs = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = true;
        for (const auto& l : legs) ok = ok && l.pass();
        failed += ok ? 0 : 1;
        std::printf("[%s] criterion %2d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.title, secs);
        for (const auto& l : legs)
            std::printf("    %-4s %s = %.10g %s %g\n", l.pass() ? "ok" : "FAIL", l.name.c_str(), l.value, l.op(), l.limit);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
