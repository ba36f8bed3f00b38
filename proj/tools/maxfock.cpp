#include "cli/config.hpp"
#include "cli/scenarios.hpp"
#include "cli/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

using namespace maxfock::cli;

struct Flag {
    const char* key;
    const char* name;
    const char* help;
};

// flags shared by every subcommand
constexpr Flag kCommon[] = {
    {"L", "--L", "box length (number or multiple of pi, e.g. 2pi)"},
    {"N", "--N", "points per axis (even, >= 4)"},
    {"constants", "--constants", "natural or si"},
    {"hbar", "--hbar", "override hbar"},
    {"eps0", "--eps0", "override eps0"},
    {"c", "--c", "override c"},
    {"seed", "--seed", "random seed"},
    {"output", "--output,-o", "output directory"},
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maxfock: LP and BB quantizations of the free Maxwell field on a periodic grid"};
    app.require_subcommand(1);

    std::string config_path;
    std::map<std::string, std::string> flags;
    std::vector<std::string> fidelity_files;
    std::map<const CLI::App*, std::vector<std::pair<std::string, const CLI::Option*>>> given;

    auto add_flags = [&](CLI::App* sub, std::initializer_list<Flag> extra) {
        sub->add_option("--config", config_path, "key = value config file");
        for (const auto& f : kCommon) given[sub].emplace_back(f.key, sub->add_option(f.name, flags[f.key], f.help));
        for (const auto& f : extra) given[sub].emplace_back(f.key, sub->add_option(f.name, flags[f.key], f.help));
    };

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_flags(verify, {{"suite", "--suite", "all|grid|spectral|representations|isomorphism|fock|dynamics|fidelity|kernels"},
                       {"samples", "--samples", "random samples per property"},
                       {"kernel_L", "--kernel-L", "box length of the coarsest kernel level"},
                       {"kernel_N", "--kernel-N", "points per axis of the coarsest kernel level"},
                       {"levels", "--levels", "kernel refinement levels"}});

    auto* evolve = app.add_subcommand("evolve", "evolve a seeded field and log conserved quantities");
    add_flags(evolve, {{"modes", "--modes", "number of lowest modes populated (0: full random field)"},
                       {"steps", "--steps", "time steps"},
                       {"dt", "--dt", "time step (0: 2 pi / (64 w_max))"},
                       {"representation", "--representation", "lp|rs|bb|fields"},
                       {"snapshot_every", "--snapshot-every", "write a snapshot every k steps (0: none)"},
                       {"profile", "--profile", "flat | gaussian[:k] | band:kmin:kmax"}});

    auto* fidelity = app.add_subcommand("fidelity", "fidelities between two snapshot files");
    add_flags(fidelity, {});
    fidelity->add_option("snapshots", fidelity_files, "two snapshot files")->expected(0, 2);

    auto* kernel = app.add_subcommand("kernel-check", "real-space kernels against the spectral route");
    add_flags(kernel, {{"kernel_L", "--kernel-L", "box length of the coarsest level"},
                       {"kernel_N", "--kernel-N", "points per axis of the coarsest level"},
                       {"levels", "--levels", "refinement levels"}});

    auto* spectrum = app.add_subcommand("spectrum", "mode amplitudes of a snapshot or seeded field as CSV");
    add_flags(spectrum, {{"input", "--input", "snapshot file (default: seeded random field)"},
                         {"amplitudes", "--amplitudes", "momentum|rs|bb-basis|bb-momentum"},
                         {"profile", "--profile", "flat | gaussian[:k] | band:kmin:kmax"}});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }

    RunConfig config;
    try {
        if (!config_path.empty()) read_config(config_path, config);
        CLI::App* chosen = app.get_subcommands().front();
        config.scenario = parse_scenario(chosen->get_name());
        for (const auto& [key, option] : given[chosen])
            if (option->count() > 0) set_value(config, key, flags[key]);
        if (!fidelity_files.empty()) {
            if (fidelity_files.size() != 2) throw ConfigError("flag", 0, "snapshots", "fidelity takes two snapshot files");
            config.snapshot_a = fidelity_files[0];
            config.snapshot_b = fidelity_files[1];
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    }
    return run(config, std::cout);
}
