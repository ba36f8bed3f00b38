#include "cli/scenarios.hpp"

#include "cli/suites.hpp"

#include <maxfock/maxfock.hpp>
#include <maxfock/parallel.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace maxfock::cli {

namespace {

/// Bad input files (unreadable, wrong kind, mismatched grids). Reported like config errors.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TeeBuf : public std::streambuf {
public:
    TeeBuf(std::streambuf* a, std::streambuf* b) : a_(a), b_(b) {}

protected:
    int overflow(int ch) override {
        if (ch == traits_type::eof()) return traits_type::not_eof(ch);
        const auto c = static_cast<char>(ch);
        if (a_->sputc(c) == traits_type::eof() || b_->sputc(c) == traits_type::eof()) return traits_type::eof();
        return ch;
    }
    int sync() override { return (a_->pubsync() == 0 && b_->pubsync() == 0) ? 0 : -1; }

private:
    std::streambuf* a_;
    std::streambuf* b_;
};

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
}

void write_summary(const std::filesystem::path& dir, const Report& report) {
    write_text(dir / "summary.json", report.to_json().dump(2) + "\n");
}

std::string label_for(RunRepresentation rep) {
    switch (rep) {
    case RunRepresentation::LP: return "psi_LP";
    case RunRepresentation::BB: return "F_BB";
    default: return "F_RS";
    }
}

/// BB vector carried by a snapshot, whatever representation it was written in.
VectorFieldC snapshot_to_bb(const Snapshot& snap, const std::string& what) {
    const auto& k = snap.constants;
    if (const auto* bs = std::get_if<Bispinor>(&snap.field)) return bispinor_join(*bs);
    const auto* f = std::get_if<VectorFieldC>(&snap.field);
    if (!f) throw InputError(what + ": real3 snapshot carries no complex field");
    const std::string tag = snap.label.substr(0, snap.label.find(' '));
    if (tag == "psi_LP") return iso_i(*f, k);
    if (tag == "F_RS") return bb_vector(fields_from_rs(*f, k), k);
    return *f;
}

Snapshot load(const std::filesystem::path& path, const std::string& what) {
    try {
        return read_snapshot(path);
    } catch (const std::exception& e) {
        throw InputError(what + " (" + path.string() + "): " + e.what());
    }
}

/// Starting LP field: `modes` lowest modes with seeded Gaussian weights, or a full random state.
VectorFieldC initial_lp(const RunConfig& cfg, const GridSpec& grid) {
    if (cfg.modes == 0) return random_state(grid, cfg.seed, SpectrumProfile::parse(cfg.profile));
    const auto basis = fock::ModeBasis::lowest(grid, static_cast<std::size_t>(cfg.modes), cfg.constants);
    CounterRng rng(cfg.seed);
    VectorFieldC psi(grid);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const double re = rng.normal(), im = rng.normal();
        psi += basis.lp_field(j) * (cplx(re, im) / std::numbers::sqrt2);
    }
    return psi;
}

VectorFieldC in_representation(const VectorFieldC& psi, RunRepresentation rep, const PhysicalConstants& k) {
    switch (rep) {
    case RunRepresentation::LP: return psi;
    case RunRepresentation::BB: return iso_i(psi, k);
    default: return rs_vector(fields_from_bb(iso_i(psi, k), k), k);
    }
}

/// Same values relabelled as LP momentum amplitudes (all unit-weight kinds share the phi basis).
ModeAmplitudes as_momentum(const ModeAmplitudes& a) {
    return {a.grid(), AmplitudeKind::Momentum, std::vector<cplx>(a.values().begin(), a.values().end())};
}

int finish(const RunConfig& cfg, const Report& report, std::ostream& log) {
    write_summary(cfg.output, report);
    const auto failed = report.failures();
    log << (failed == 0 ? "OK" : "FAILED") << ": " << report.checks().size() - failed << '/' << report.checks().size()
        << " checks passed\n";
    return failed == 0 ? kOk : kInvariantFailure;
}

int run_verify(const RunConfig& cfg, std::ostream& log) {
    if (!is_suite(cfg.suite)) throw ConfigError("config", 0, "suite", "unknown suite '" + cfg.suite + "'");
    const SuiteContext ctx{GridSpec(cfg.L, cfg.N), cfg.constants, cfg.seed, cfg.samples,
                           GridSpec(cfg.kernel_L, cfg.kernel_N), cfg.levels};
    log << "verify suite=" << cfg.suite << " L=" << num(cfg.L) << " N=" << cfg.N << " seed=" << cfg.seed
        << " samples=" << cfg.samples << '\n';
    Report report(&log);
    run_suite(cfg.suite, ctx, report);
    return finish(cfg, report, log);
}

int run_evolve(const RunConfig& cfg, std::ostream& log) {
    const GridSpec grid(cfg.L, cfg.N);
    const auto& k = cfg.constants;
    const auto initial = in_representation(initial_lp(cfg, grid), cfg.representation, k);
    const double dt = cfg.dt > 0.0 ? cfg.dt : default_residual_step(initial, k);
    log << "evolve representation=" << representation_name(cfg.representation) << " modes=" << cfg.modes
        << " steps=" << cfg.steps << " dt=" << num(dt) << '\n';

    const auto run = run_evolution(initial, cfg.representation, dt, cfg.steps, k);

    std::ostringstream csv;
    csv << "t,H_LP,K_BB,K_RS,E_tot,div_residual\n";
    for (const auto& r : run.log)
        csv << num(r.t) << ',' << num(r.h_lp) << ',' << num(r.k_bb) << ',' << num(r.k_rs) << ',' << num(r.e_tot) << ','
            << num(r.div_residual) << '\n';
    write_text(cfg.output / "conservation.csv", csv.str());

    if (cfg.snapshot_every > 0) {
        const auto dir = cfg.output / "snapshots";
        std::filesystem::create_directories(dir);
        for (std::size_t j = 0; j < run.snapshots.size(); j += static_cast<std::size_t>(cfg.snapshot_every)) {
            std::ostringstream name;
            name << "step_" << std::setw(6) << std::setfill('0') << j << ".snap";
            write_snapshot(dir / name.str(),
                           Snapshot{grid, k, label_for(cfg.representation) + " t=" + num(run.times[j]), run.snapshots[j]});
        }
    }

    Report report(&log);
    const auto drift = max_relative_drift(run);
    const char* names[] = {"h_lp", "k_bb", "k_rs", "e_tot"};
    for (int q = 0; q < 4; ++q) report.add(std::string("evolve.drift_") + names[q], drift[q], 1e-12);
    report.add("evolve.max_relative_drift", *std::max_element(drift.begin(), drift.end()), 1e-12);
    double norm_drift = 0.0, div = 0.0;
    const double n0 = norm_lp(run.initial);
    for (std::size_t j = 0; j < run.snapshots.size(); ++j) {
        norm_drift = std::max(norm_drift, std::abs(norm_lp(run.snapshots[j]) - n0) / n0);
        div = std::max(div, run.log[j].div_residual);
    }
    report.add("evolve.norm_drift", norm_drift, 1e-13);
    report.add("evolve.div_residual", div, 1e-12);
    return finish(cfg, report, log);
}

int run_fidelity(const RunConfig& cfg, std::ostream& log, std::ostream& console) {
    const auto a = load(cfg.snapshot_a, "snapshot_a");
    const auto b = load(cfg.snapshot_b, "snapshot_b");
    if (!(a.grid == b.grid)) throw InputError("snapshots are on different grids");
    if (!(a.constants == b.constants)) throw InputError("snapshots use different constants");
    const auto& k = a.constants;
    const auto fa = snapshot_to_bb(a, "snapshot_a");
    const auto fb = snapshot_to_bb(b, "snapshot_b");

    nlohmann::json out;
    try {
        out["F_bb"] = fidelity_bb(fa, fb, k);
        out["F_m"] = fidelity_m(bb_momentum(fa, k), bb_momentum(fb, k));
        out["F_unweighted"] = fidelity_unweighted(fa, fb);
        out["F_lp"] = fidelity_lp(iso_i_inverse(fa, k), iso_i_inverse(fb, k));
    } catch (const ZeroStateFidelity& e) {
        throw InputError(e.what());
    } catch (const NegativePowerOnZeroMode& e) {
        throw InputError(e.what());
    }
    const std::string text = out.dump(2) + "\n";
    console << text;
    write_text(cfg.output / "fidelity.json", text);

    Report report(&log);
    const double fbb = out["F_bb"];
    report.add("fidelity.momentum_vs_position", std::abs(out["F_m"].get<double>() - fbb), 1e-12);
    report.add("fidelity.lp_vs_bb", std::abs(out["F_lp"].get<double>() - fbb), 1e-12);
    return finish(cfg, report, log);
}

int run_kernel_check(const RunConfig& cfg, std::ostream& log) {
    log << "kernel-check L=" << num(cfg.kernel_L) << " N=" << cfg.kernel_N << " levels=" << cfg.levels << '\n';
    std::vector<KernelLevel> levels;
    try {
        levels = kernel_levels(GridSpec(cfg.kernel_L, cfg.kernel_N), cfg.levels, cfg.constants);
    } catch (const SupportTooLarge& e) {
        throw ConfigError("config", 0, "kernel_L", e.what());
    }
    std::ostringstream csv;
    csv << "L,N,operator,relative_error\n";
    for (const auto& l : levels) {
        const std::pair<const char*, double> rows[] = {{"neg_half", l.neg_half},
                                                       {"pos_half", l.pos_half},
                                                       {"pos_half_corrected", l.pos_half_corrected},
                                                       {"composition", l.composition}};
        for (const auto& [op, err] : rows) csv << num(l.L) << ',' << l.N << ',' << op << ',' << num(err) << '\n';
    }
    write_text(cfg.output / "kernel_check.csv", csv.str());
    Report report(&log);
    add_kernel_checks(levels, report);
    return finish(cfg, report, log);
}

int run_spectrum(const RunConfig& cfg, std::ostream& log) {
    PhysicalConstants k = cfg.constants;
    std::optional<VectorFieldC> loaded;
    if (!cfg.input.empty()) {
        const auto snap = load(cfg.input, "input");
        k = snap.constants;
        loaded = snapshot_to_bb(snap, "input");
    } else {
        loaded = iso_i(random_state(GridSpec(cfg.L, cfg.N), cfg.seed, SpectrumProfile::parse(cfg.profile)), k);
    }
    const VectorFieldC& f_bb = *loaded;

    const auto psi = iso_i_inverse(f_bb, k);
    ModeAmplitudes amps(f_bb.grid(), cfg.amplitudes);
    double expected = 0.0;
    VectorFieldC back(f_bb.grid());
    VectorFieldC source(f_bb.grid());
    switch (cfg.amplitudes) {
    case AmplitudeKind::Momentum:
        amps = map_m(psi);
        expected = std::pow(norm_lp(psi), 2);
        back = map_m_inverse(amps);
        source = psi;
        break;
    case AmplitudeKind::Rs: {
        const auto f_rs = rs_vector(fields_from_bb(f_bb, k), k);
        amps = rs_amplitudes(f_rs);
        expected = std::pow(norm_lp(f_rs), 2);
        back = map_m_inverse(as_momentum(amps));
        source = f_rs;
        break;
    }
    case AmplitudeKind::BbBasis:
        amps = bb_basis_amplitudes(f_bb, k);
        expected = inner_bb(f_bb, f_bb, k).real();
        back = iso_i(map_m_inverse(as_momentum(amps)), k);
        source = f_bb;
        break;
    case AmplitudeKind::BbMomentum:
        amps = bb_momentum(f_bb, k);
        expected = inner_bb(f_bb, f_bb, k).real();
        back = bb_momentum_inverse(amps, k);
        source = f_bb;
        break;
    }

    std::ostringstream csv;
    write_amplitudes_csv(csv, amps);
    write_text(cfg.output / "spectrum.csv", csv.str());
    log << "spectrum modes=" << amps.size() << '\n';

    Report report(&log);
    report.add("spectrum.parseval", std::abs(inner(amps, amps).real() - expected) / expected, 1e-12);
    report.add("spectrum.reconstruction", relative_error(back, source), 1e-12);
    std::istringstream again(csv.str());
    const auto reread = read_amplitudes_csv(again, amps.grid(), amps.kind());
    double diff = 0.0, peak = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        diff = std::max(diff, std::abs(reread[i] - amps[i]));
        peak = std::max(peak, std::abs(amps[i]));
    }
    report.add("spectrum.csv_round_trip", diff / peak, 0.0);
    return finish(cfg, report, log);
}

} // namespace

int run(const RunConfig& config, std::ostream& console) {
    try {
        validate(config);
        std::filesystem::create_directories(config.output);
    } catch (const ConfigError& e) {
        console << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::filesystem::filesystem_error& e) {
        console << "config error: output: " << e.what() << '\n';
        return kConfigError;
    }
    std::ofstream logfile(config.output / "maxfock.log");
    TeeBuf tee(console.rdbuf(), logfile.rdbuf());
    std::ostream log(&tee);
    log << "maxfock " << scenario_name(config.scenario) << " threads=" << thread_limit() << '\n';
    try {
        switch (config.scenario) {
        case Scenario::Verify: return run_verify(config, log);
        case Scenario::Evolve: return run_evolve(config, log);
        case Scenario::Fidelity: return run_fidelity(config, log, console);
        case Scenario::KernelCheck: return run_kernel_check(config, log);
        case Scenario::Spectrum: return run_spectrum(config, log);
        }
    } catch (const ConfigError& e) {
        log << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const InputError& e) {
        log << "input error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        log << "run failed: " << e.what() << '\n';
        return kInvariantFailure;
    }
    return kConfigError;
}

} // namespace maxfock::cli
