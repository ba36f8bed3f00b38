#include "cli/suites.hpp"

#include <maxfock/maxfock.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>

namespace maxfock::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), std::numeric_limits<double>::min()); }

std::uint64_t sample_seed(const SuiteContext& ctx, std::uint64_t stream, int i) {
    return ctx.seed * 1'000'003ULL + stream * 10'007ULL + static_cast<std::uint64_t>(i);
}

/// Complex noise with no structure at all, for transform checks.
VectorFieldC raw_noise(const GridSpec& g, std::uint64_t seed) {
    CounterRng rng(seed);
    VectorFieldC f(g);
    for (auto& v : f)
        for (auto& x : v.c) x = {rng.normal(), rng.normal()};
    return f;
}

CanonicalPairLP random_pair(const SuiteContext& ctx, std::uint64_t stream, int i) {
    const auto s = sample_seed(ctx, stream, i);
    return {random_real_state(ctx.grid, 2 * s), random_real_state(ctx.grid, 2 * s + 1)};
}

double max_entry(const fock::SparseMatrix& m) {
    double out = 0.0;
    for (int k = 0; k < m.outerSize(); ++k)
        for (fock::SparseMatrix::InnerIterator it(m, k); it; ++it) out = std::max(out, std::abs(it.value()));
    return out;
}

std::vector<cplx> random_eta(CounterRng& rng, std::size_t m) {
    std::vector<cplx> eta(m);
    for (auto& e : eta) e = {rng.normal(), rng.normal()};
    return eta;
}

// ---- suites ----

void grid_suite(const SuiteContext& ctx, Report& r) {
    double round_trip = 0.0, parseval = 0.0;
    for (int i = 0; i < ctx.samples; ++i) {
        const auto f = raw_noise(ctx.grid, sample_seed(ctx, 1, i));
        const auto g = raw_noise(ctx.grid, sample_seed(ctx, 2, i));
        round_trip = std::max(round_trip, relative_error(from_spectral(to_spectral(f)), f));
        parseval = std::max(parseval, std::abs(inner_lp(f, g) - inner_spectral(to_spectral(f), to_spectral(g))) /
                                          (norm_lp(f) * norm_lp(g)));
    }
    r.add("grid.fft_round_trip", round_trip, 1e-13);
    r.add("grid.parseval", parseval, 1e-13);

    // every spectral operator must leave the Nyquist planes empty
    const auto F = to_spectral(curl(raw_noise(ctx.grid, sample_seed(ctx, 3, 0))));
    double nyq = 0.0, peak = 0.0;
    for (std::size_t p = 0; p < ctx.grid.size(); ++p) {
        const double a = std::sqrt(norm2(F[p]));
        peak = std::max(peak, a);
        if (ctx.grid.wavevector(p).nyquist) nyq = std::max(nyq, a);
    }
    r.add("grid.nyquist_clean", nyq / peak, 1e-14);
}

void spectral_suite(const SuiteContext& ctx, Report& r) {
    const auto& g = ctx.grid;
    const auto& k = ctx.constants;
    double curl_err = 0.0, hel_err = 0.0, om_err = 0.0;
    for (const auto& m : *retained_modes(g)) {
        const auto phi = plane_wave_mode(g, m.n, m.sigma);
        const double kk = std::sqrt(norm2(g.k_vector(m.n)));
        const double s = sign(m.sigma);
        curl_err = std::max(curl_err, norm_lp(curl(phi) - phi * cplx(s * kk)));
        hel_err = std::max(hel_err, norm_lp(helicity(phi) - phi * cplx(s)));
        om_err = std::max(om_err, norm_lp(omega_pow(phi, 1.0, k) - phi * cplx(k.c * kk)) / (k.c * kk));
    }
    r.add("spectral.curl_eigen", curl_err, 1e-12);
    r.add("spectral.helicity_eigen", hel_err, 1e-12);
    r.add("spectral.omega_eigen", om_err, 1e-12);

    double invol = 0.0, comp = 0.0, div = 0.0, split = 0.0;
    const double kmax = std::sqrt(3.0) * g.dk() * (g.points_per_axis() / 2);
    for (int i = 0; i < ctx.samples; ++i) {
        const auto f = random_state(g, sample_seed(ctx, 4, i));
        const double nf = norm_lp(f);
        invol = std::max(invol, norm_lp(helicity(helicity(f)) - f) / nf);
        comp = std::max(comp, relative_error(omega_pow(omega_pow(f, 0.5, k), 0.5, k), omega_pow(f, 1.0, k)));
        const auto d = divergence(f);
        div = std::max(div, std::sqrt(inner_lp(d, d).real()) / (kmax * nf));
        const auto sum = project_helicity(f, Helicity::Plus) + project_helicity(f, Helicity::Minus);
        split = std::max(split, relative_error(sum, f));
    }
    r.add("spectral.helicity_involution", invol, 1e-12);
    r.add("spectral.omega_half_composition", comp, 1e-12);
    r.add("spectral.random_state_divergence", div, 1e-12);
    r.add("spectral.helicity_projector_sum", split, 1e-12);
}

void representations_suite(const SuiteContext& ctx, Report& r) {
    const auto& k = ctx.constants;
    double lp_round = 0.0, bb_round = 0.0, chain_lp = 0.0, chain_bb = 0.0, chain_sq = 0.0, density = 0.0;
    double kbb_min = kInf, kbb_rescaled = 0.0;
    for (int i = 0; i < ctx.samples; ++i) {
        const auto pair = random_pair(ctx, 5, i);
        const auto psi = lp_from_potentials(pair, k);
        const auto pot = fields_from_lp(psi, k);
        VectorFieldR e_from_pi = pair.Pi;
        e_from_pi *= -1.0 / k.eps0;
        lp_round = std::max({lp_round, relative_error(pot.A, pair.A), relative_error(pot.E, e_from_pi)});

        const EmFields f{pot.E, pot.B};
        const auto f_bb = bb_vector(f, k);
        const auto back = fields_from_bb(f_bb, k);
        bb_round = std::max({bb_round, relative_error(back.E, f.E), relative_error(back.B, f.B)});

        const double e = total_energy(f, k);
        chain_lp = std::max(chain_lp, rel(hamilton_lp(psi, k), e));
        chain_bb = std::max(chain_bb, rel(k_bb(f_bb, k), e));
        chain_sq = std::max(chain_sq, rel(inner_lp(f_bb, f_bb).real(), e));
        kbb_rescaled = std::max(kbb_rescaled, rel(k_bb(omega_pow(f_bb, -0.5, k), k), e));
        density = std::max(density, rel(integrate(energy_density(bispinor_split(f_bb))), e));
        kbb_min = std::min(kbb_min, k_bb(f_bb, k));
    }
    r.add("representations.lp_round_trip", lp_round, 1e-12);
    r.add("representations.bb_round_trip", bb_round, 1e-12);
    r.add("representations.energy_chain.hamilton_lp", chain_lp, 1e-11);
    r.add("representations.energy_chain.k_bb", chain_bb, 1e-11);
    r.add("representations.energy_chain.bb_norm_squared", chain_sq, 1e-11);
    r.add("representations.energy_chain.k_bb_omega_rescaled", kbb_rescaled, 1e-11);
    r.add("representations.energy_density_integral", density, 1e-12);
    r.add("representations.k_bb_min", kbb_min, 0.0, Bound::AtLeast);

    double plus_min = kInf, minus_max = -kInf, abs_eq = 0.0;
    for (int i = 0; i < ctx.samples; ++i) {
        const auto s = sample_seed(ctx, 6, i);
        const auto p = random_helicity_state(ctx.grid, s, Helicity::Plus);
        const auto m = random_helicity_state(ctx.grid, s, Helicity::Minus);
        const double kp = k_rs(p, k), km = k_rs(m, k);
        plus_min = std::min(plus_min, kp);
        minus_max = std::max(minus_max, km);
        abs_eq = std::max({abs_eq, rel(std::abs(kp), k_bb(p, k)), rel(std::abs(km), k_bb(m, k))});
    }
    r.add("representations.k_rs_plus_min", plus_min, 0.0, Bound::Above);
    r.add("representations.k_rs_minus_max", minus_max, 0.0, Bound::Below);
    r.add("representations.abs_k_rs_equals_k_bb", abs_eq, 1e-12);
}

void isomorphism_suite(const SuiteContext& ctx, Report& r) {
    const auto& k = ctx.constants;
    double iso = 0.0, mm = 0.0, bbm = 0.0, bbb = 0.0, inv = 0.0, m_inv = 0.0, two_route = 0.0, equi = 0.0;
    for (int i = 0; i < ctx.samples; ++i) {
        const auto a = random_state(ctx.grid, sample_seed(ctx, 7, i));
        const auto b = random_state(ctx.grid, sample_seed(ctx, 8, i));
        const double scale = norm_lp(a) * norm_lp(b);
        const cplx ref = inner_lp(a, b);
        const auto ia = iso_i(a, k), ib = iso_i(b, k);
        iso = std::max(iso, std::abs(inner_bb(ia, ib, k) - ref) / scale);
        mm = std::max(mm, std::abs(inner(map_m(a), map_m(b)) - ref) / scale);
        bbm = std::max(bbm, std::abs(inner(bb_momentum(ia, k), bb_momentum(ib, k)) - ref) / scale);
        bbb = std::max(bbb, std::abs(inner(bb_basis_amplitudes(ia, k), bb_basis_amplitudes(ib, k)) - ref) / scale);
        inv = std::max(inv, relative_error(iso_i_inverse(ia, k), a));
        m_inv = std::max(m_inv, relative_error(map_m_inverse(map_m(a)), a));

        const auto pair = random_pair(ctx, 9, i);
        const auto psi = lp_from_potentials(pair, k);
        const auto pot = fields_from_lp(psi, k);
        two_route = std::max(two_route, relative_error(iso_i(psi, k), bb_vector({pot.E, pot.B}, k)));

        const double t = 0.37 * (i + 1);
        equi = std::max(equi, relative_error(iso_i(evolve(a, t, k), k), evolve(ia, t, k)));
    }
    r.add("isomorphism.iso_i_unitarity", iso, 1e-11);
    r.add("isomorphism.map_m_unitarity", mm, 1e-11);
    r.add("isomorphism.bb_momentum_unitarity", bbm, 1e-11);
    r.add("isomorphism.bb_basis_unitarity", bbb, 1e-11);
    r.add("isomorphism.iso_i_round_trip", inv, 1e-12);
    r.add("isomorphism.map_m_round_trip", m_inv, 1e-12);
    r.add("isomorphism.two_route_consistency", two_route, 1e-11);
    r.add("isomorphism.evolve_equivariance", equi, 1e-13);
}

void fock_suite(const SuiteContext& ctx, Report& r) {
    using namespace fock;
    const auto basis = ModeBasis::lowest(ctx.grid, 4, ctx.constants);
    const auto lp = make_space(basis, 3, Representation::LP);
    const auto bb = lp->twin();
    const auto h_lp = hamiltonian(lp);
    const auto h_bb = hamiltonian(bb);
    const auto omegas = basis.omegas();
    const auto dg = dgamma(lp, omegas, ctx.constants);
    r.add("fock.hamiltonian_lp_vs_bb", max_entry(h_lp.matrix() - h_bb.matrix()), 1e-13);
    r.add("fock.hamiltonian_vs_dgamma", max_entry(h_lp.matrix() - dg.matrix()), 1e-13);
    r.add("fock.lifted_hamiltonian", max_entry(lift_iso(h_lp, LiftDirection::LpToBb).matrix() - h_bb.matrix()), 1e-13);

    CounterRng rng(sample_seed(ctx, 10, 0));
    double defect = 0.0, lift = 0.0, expect = 0.0;
    for (int i = 0; i < ctx.samples; ++i) {
        const auto ea = random_eta(rng, basis.size());
        const auto eb = random_eta(rng, basis.size());
        defect = std::max({defect, commutator_defect(lp, ea, eb), commutator_defect(bb, ea, eb)});

        const auto s = single_photon(lp, ea);
        const auto t = single_photon(lp, eb);
        const cplx ref = inner(s, t);
        lift = std::max(lift, std::abs(inner(lift_iso(s, LiftDirection::LpToBb), lift_iso(t, LiftDirection::LpToBb)) - ref) /
                                  (s.norm() * t.norm()));

        double e = 0.0;
        for (std::size_t j = 0; j < basis.size(); ++j) e += std::norm(ea[j]) * ctx.constants.hbar * omegas[j];
        expect = std::max(expect, rel(h_lp.expectation(s, s).real(), e));
    }
    r.add("fock.commutator_defect", defect, 1e-12);
    r.add("fock.lift_unitarity", lift, 1e-13);
    r.add("fock.single_photon_energy", expect, 1e-12);

    const auto f = random_state(ctx.grid, sample_seed(ctx, 11, 0));
    const auto lhs = lift_iso(smeared_lp_field(lp, f), LiftDirection::LpToBb);
    const auto rhs = cplx(0, -1.0 / std::sqrt(ctx.constants.hbar)) * smeared_bb_field(bb, omega_pow(f, -0.5, ctx.constants));
    r.add("fock.smeared_field_correspondence", max_entry(lhs.matrix() - rhs.matrix()) / max_entry(lhs.matrix()), 1e-12);
}

void dynamics_suite(const SuiteContext& ctx, Report& r) {
    const auto& g = ctx.grid;
    const auto& k = ctx.constants;
    const auto psi = random_state(g, sample_seed(ctx, 12, 0));
    const double dt = 0.05;
    const char* names[] = {"h_lp", "k_bb", "k_rs", "e_tot"};
    for (auto rep : {RunRepresentation::LP, RunRepresentation::BB, RunRepresentation::RS}) {
        VectorFieldC initial = psi;
        if (rep == RunRepresentation::BB) initial = iso_i(psi, k);
        if (rep == RunRepresentation::RS) {
            const auto f = fields_from_bb(iso_i(psi, k), k);
            initial = rs_vector(f, k);
        }
        const auto run = run_evolution(initial, rep, dt, 100, k);
        const auto drift = max_relative_drift(run);
        const std::string tag = "dynamics." + std::string(rep == RunRepresentation::LP ? "lp" : rep == RunRepresentation::BB ? "bb" : "rs");
        for (int q = 0; q < 4; ++q) r.add(tag + ".drift_" + names[q], drift[q], 1e-12);
        double norm_drift = 0.0, div = 0.0;
        const double n0 = norm_lp(run.initial);
        for (std::size_t j = 0; j < run.snapshots.size(); ++j) {
            norm_drift = std::max(norm_drift, rel(norm_lp(run.snapshots[j]), n0));
            div = std::max(div, run.log[j].div_residual);
        }
        r.add(tag + ".norm_drift", norm_drift, 1e-13);
        r.add(tag + ".div_residual", div, 1e-12);
    }

    const double t1 = 0.7, t2 = 1.9;
    r.add("dynamics.group_law", relative_error(evolve(evolve(psi, t1, k), t2, k), evolve(psi, t1 + t2, k)), 1e-13);
    r.add("dynamics.helicity_commutes",
          relative_error(project_helicity(evolve(psi, t1, k), Helicity::Plus), evolve(project_helicity(psi, Helicity::Plus), t1, k)),
          1e-12);

    const auto f_bb = iso_i(psi, k);
    const auto conv = maxwell_convergence(f_bb, 0.4, default_residual_step(f_bb, k), k);
    r.add("dynamics.maxwell_order_random", std::min(conv.order[0], conv.order[1]), 1.9, Bound::AtLeast);
    const auto wave = bb_vector(analytic_circular_wave(g, {0, 0, 1}, Helicity::Plus, 0.0, k), k);
    const auto wconv = maxwell_convergence(wave, 0.0, default_residual_step(wave, k), k);
    r.add("dynamics.maxwell_order_circular", std::min(wconv.order[0], wconv.order[1]), 1.9, Bound::AtLeast);

    // plane-wave catalog
    const KIndex n{0, 0, 2};
    const double w = k.c * 2.0 * g.dk();
    double form = 0.0;
    for (Helicity s : {Helicity::Plus, Helicity::Minus}) {
        const double t = 0.3;
        const auto bs = bispinor_split(bb_vector(analytic_circular_wave(g, n, s, t, k), k));
        const auto expected = plane_wave_mode(g, n, s) * std::polar(1.0, -w * t);
        if (s == Helicity::Plus) form = std::max({form, relative_error(bs.upper, expected), norm_lp(bs.lower) / norm_lp(bs.upper)});
        else form = std::max({form, relative_error(bs.lower, expected), norm_lp(bs.upper) / norm_lp(bs.lower)});
    }
    r.add("dynamics.circular_bispinor_form", form, 1e-12);

    const cplx ap = std::polar(0.6, 0.4), am = std::polar(0.8, -1.1);
    const auto ell = elliptic_bispinor(ap, am, g, n, 0.0, k);
    const auto left = elliptic_bispinor(1.0, 0.0, g, n, 0.0, k);
    const double unit = norm_lp(left.upper);
    double ell_err = 0.0;
    for (double t : {0.0, 0.5, 1.7, 10.0}) {
        const auto e = evolve(ell, t, k);
        const double a2 = (std::pow(norm_lp(e.upper), 2) + std::pow(norm_lp(e.lower), 2)) / (unit * unit);
        ell_err = std::max(ell_err, std::abs(a2 - 1.0));
    }
    r.add("dynamics.elliptic_norm", ell_err, 1e-12);
}

void fidelity_suite(const SuiteContext& ctx, Report& r) {
    const auto& k = ctx.constants;
    double m_gap = 0.0, lp_gap = 0.0, lo = kInf, hi = -kInf, evo = 0.0;
    for (int i = 0; i < ctx.samples; ++i) {
        const auto a = random_state(ctx.grid, sample_seed(ctx, 13, i));
        // correlate the pair so fidelities are not all near zero
        const auto b = a + random_state(ctx.grid, sample_seed(ctx, 14, i)) * cplx(0.5 * (i % 4));
        const auto fa = iso_i(a, k), fb = iso_i(b, k);
        const double fbb = fidelity_bb(fa, fb, k);
        m_gap = std::max(m_gap, std::abs(fidelity_m(bb_momentum(fa, k), bb_momentum(fb, k)) - fbb));
        lp_gap = std::max(lp_gap, std::abs(fidelity_lp(a, b) - fbb));
        lo = std::min(lo, fbb);
        hi = std::max(hi, fbb);
        const double t = 0.9 + i;
        evo = std::max(evo, std::abs(fidelity_bb(evolve(fa, t, k), evolve(fb, t, k), k) - fbb));
    }
    r.add("fidelity.momentum_vs_position", m_gap, 1e-12);
    r.add("fidelity.lp_vs_bb", lp_gap, 1e-12);
    r.add("fidelity.min", lo, 0.0, Bound::AtLeast);
    r.add("fidelity.max", hi, 1.0, Bound::AtMost);
    r.add("fidelity.evolution_invariance", evo, 1e-12);

    const auto ce = two_frequency_counterexample(ctx.grid);
    r.add("fidelity.unweighted_gap", std::abs(fidelity_unweighted(ce.f1, ce.f2) - fidelity_bb(ce.f1, ce.f2, k)), 1e-3, Bound::Above);
}

void kernels_suite(const SuiteContext& ctx, Report& r) {
    add_kernel_checks(kernel_levels(ctx.kernel_grid, ctx.kernel_levels, ctx.constants), r);
}

using SuiteFn = void (*)(const SuiteContext&, Report&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"grid", grid_suite},
        {"spectral", spectral_suite},
        {"representations", representations_suite},
        {"isomorphism", isomorphism_suite},
        {"fock", fock_suite},
        {"dynamics", dynamics_suite},
        {"fidelity", fidelity_suite},
        {"kernels", kernels_suite},
    };
    return table;
}

} // namespace

const Check& Report::add(std::string name, double value, double tolerance, Bound bound) {
    bool pass = false;
    if (std::isfinite(value)) {
        switch (bound) {
        case Bound::AtMost: pass = value <= tolerance; break;
        case Bound::AtLeast: pass = value >= tolerance; break;
        case Bound::Below: pass = value < tolerance; break;
        case Bound::Above: pass = value > tolerance; break;
        }
    }
    checks_.push_back({std::move(name), value, tolerance, bound, pass});
    const auto& c = checks_.back();
    if (log_) {
        *log_ << (c.pass ? "PASS " : "FAIL ") << c.name << " value=" << std::setprecision(10) << c.value
              << " tolerance=" << c.tolerance << '\n';
    }
    return c;
}

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
}

nlohmann::json Report::to_json() const {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& c : checks_) {
        nlohmann::json value = std::isfinite(c.value) ? nlohmann::json(c.value) : nlohmann::json(nullptr);
        out[c.name] = {{"value", value}, {"tolerance", c.tolerance}, {"pass", c.pass}};
    }
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n{"all"};
        for (const auto& [name, _] : registry()) n.push_back(name);
        return n;
    }();
    return names;
}

bool is_suite(const std::string& name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

void run_suite(const std::string& name, const SuiteContext& ctx, Report& report) {
    bool found = false;
    for (const auto& [suite, fn] : registry()) {
        if (name == "all" || name == suite) {
            fn(ctx, report);
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("unknown suite '" + name + "'");
}

void add_kernel_checks(const std::vector<KernelLevel>& levels, Report& r) {
    r.add("kernels.neg_half_error", levels.front().neg_half, 0.1);
    r.add("kernels.pos_half_error", levels.front().pos_half, 0.1);
    r.add("kernels.composition_error", levels.front().composition, 0.1);
    if (levels.size() < 2) return;
    double neg = 0.0, pos = 0.0, comp = 0.0;
    for (std::size_t i = 1; i < levels.size(); ++i) {
        neg = std::max(neg, levels[i].neg_half / levels[i - 1].neg_half);
        pos = std::max(pos, levels[i].pos_half / levels[i - 1].pos_half);
        comp = std::max(comp, levels[i].composition / levels[i - 1].composition);
    }
    // ratio of successive errors; strict decrease means every ratio is below one
    r.add("kernels.neg_half_refinement_ratio", neg, 1.0, Bound::Below);
    r.add("kernels.pos_half_refinement_ratio", pos, 1.0, Bound::Below);
    r.add("kernels.composition_refinement_ratio", comp, 1.0, Bound::Below);
}

std::vector<KernelLevel> kernel_levels(const GridSpec& coarsest, int levels, const PhysicalConstants& consts) {
    std::vector<KernelLevel> out;
    KernelOptions strict;
    strict.strict_support = true;
    KernelOptions corrected = strict;
    corrected.pv_rule = PrincipalValueRule::CurvatureCorrected;
    for (int i = 0; i < levels; ++i) {
        const GridSpec g(coarsest.box_length() * (1 << i), coarsest.points_per_axis() << i);
        const auto f = gaussian_test_field(g);
        const auto neg = riesz_neg_half(f, consts, strict);
        const auto pos = riesz_pos_half(f, consts, strict);
        const auto pos_c = riesz_pos_half(f, consts, corrected);
        const auto comp = riesz_pos_half(neg, consts);
        out.push_back({g.box_length(), g.points_per_axis(), relative_error(neg, omega_pow(f, -0.5, consts)),
                       relative_error(pos, omega_pow(f, 0.5, consts)), relative_error(pos_c, omega_pow(f, 0.5, consts)),
                       relative_error(comp, f)});
    }
    return out;
}

} // namespace maxfock::cli
