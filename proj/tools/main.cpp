#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

// Shared spec flags.  Defaults follow the reference configuration: tau = 1,
// m = 0 everywhere, site 1.
void add_spec_options(CLI::App* cmd, oscnet::cli::SpecOptions& opts, bool required_s = true) {
    auto* s = cmd->add_option("--s", opts.s, "Ring size (number of oscillators)");
    if (required_s) s->required();
    cmd->add_option("--tau", opts.tau, "Transfer period in seconds")->capture_default_str();
    cmd->add_option("--m", opts.m,
                    "Excitation indices: a single value broadcasts to all sites, or a "
                    "comma list of exactly s entries")
        ->capture_default_str();
}

void add_out_option(CLI::App* cmd, std::string& out_path) {
    cmd->add_option("--out", out_path, "Write output to this path instead of stdout");
    cmd->fallthrough();  // lets app-level flags like --config follow the subcommand name
}

int run_with_output(const std::string& out_path, const std::function<int(std::ostream&)>& body) {
    if (out_path.empty()) return body(std::cout);
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "oscnet: error: cannot open output path '" << out_path << "'\n";
        return 1;
    }
    return body(file);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace oscnet::cli;

    CLI::App app{"oscnet: synthesize and verify coupled-oscillator networks that transfer "
                 "quantum states perfectly around a ring"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);
    app.set_config("--config", "",
                   "INI file with one [subcommand] section holding key=value options");

    std::string out_path;

    // synthesize
    SpecOptions synth_opts;
    std::string synth_perm, synth_format = "json";
    auto* synth = app.add_subcommand(
        "synthesize", "Emit the coupling matrix realizing perfect cyclic transfer");
    add_spec_options(synth, synth_opts);
    synth->add_option("--perm", synth_perm,
                      "Target a permutation instead of the ring shift: 1-based image list "
                      "(e.g. 2,3,1 sends site 1 to 2, 2 to 3, 3 to 1). Entries of --m are "
                      "consumed cycle by cycle, cycles ordered by smallest site and traversed "
                      "from it");
    synth->add_option("--format", synth_format, "json or csv")->capture_default_str();
    add_out_option(synth, out_path);

    // evolve
    SpecOptions evolve_opts;
    std::string evolve_coupling, evolve_route, evolve_format = "json";
    std::optional<double> evolve_t;
    auto* evolve = app.add_subcommand(
        "evolve", "Emit the propagator pair (mu, nu) at a given time");
    add_spec_options(evolve, evolve_opts, false);
    evolve->add_option("--coupling", evolve_coupling,
                       "JSON coupling file from 'synthesize' (replaces --s/--tau/--m)");
    evolve->add_option("--t", evolve_t, "Evolution time in seconds (default: tau)");
    evolve->add_option("--route", evolve_route,
                       "closed, spectral or exponential (default spectral; a coupling file "
                       "implies exponential)");
    evolve->add_option("--format", evolve_format, "json or csv")->capture_default_str();
    add_out_option(evolve, out_path);

    // sweep-g
    SpecOptions sweep_opts;
    int sweep_site = 1, sweep_steps = 701;
    double sweep_t_min = 0.0;
    std::optional<double> sweep_t_max;
    auto* sweep = app.add_subcommand(
        "sweep-g", "Tabulate the transfer indicator g_site(t) = |mu_site,1(t)|^2 as CSV");
    add_spec_options(sweep, sweep_opts);
    sweep->add_option("--site", sweep_site, "Observed site, 1-based")->capture_default_str();
    sweep->add_option("--t-min", sweep_t_min, "Window start in seconds")->capture_default_str();
    sweep->add_option("--t-max", sweep_t_max, "Window end in seconds (default: s*tau)");
    sweep->add_option("--steps", sweep_steps, "Number of grid points, endpoints included")
        ->capture_default_str();
    add_out_option(sweep, out_path);

    // transfer-check
    SpecOptions check_opts;
    int check_from = 1, check_to = 2;
    std::optional<double> check_t;
    std::string check_route, check_beta;
    auto* check = app.add_subcommand(
        "transfer-check", "Verify the perfect-transfer condition between two sites");
    add_spec_options(check, check_opts);
    check->add_option("--from", check_from, "Source site, 1-based")->capture_default_str();
    check->add_option("--to", check_to, "Destination site, 1-based")->capture_default_str();
    check->add_option("--t", check_t, "Check time in seconds (default: tau)");
    check->add_option("--route", check_route, "closed, spectral or exponential");
    check->add_option("--beta", check_beta,
                      "Coherent amplitude 're' or 're,im': also verify the reduced state of "
                      "|beta> from site 1 is restored at --to");
    add_out_option(check, out_path);

    // fock-demo
    SpecOptions fock_opts;
    int fock_photon = 1;
    auto* fock = app.add_subcommand(
        "fock-demo", "Propagate |n,0,...,0> exactly and tabulate transfer fidelities at k*tau");
    add_spec_options(fock, fock_opts);
    fock->add_option("--photon", fock_photon, "Photon number n of the source site")
        ->capture_default_str();
    add_out_option(fock, out_path);

    // entangle-demo
    SpecOptions entangle_opts;
    int entangle_photon = 1;
    auto* entangle = app.add_subcommand(
        "entangle-demo",
        "Propagate the entangled pair (|n,0,...> + |0,n,...>)/sqrt(2) and tabulate restoration "
        "fidelities at k*tau");
    add_spec_options(entangle, entangle_opts);
    entangle->add_option("--photon", entangle_photon, "Photon number n of the pair")
        ->capture_default_str();
    add_out_option(entangle, out_path);

    // bs-cascade
    double bs_angle1 = 0.0, bs_angle2 = 0.0;
    auto* bs = app.add_subcommand(
        "bs-cascade", "Send one photon through two beam splitters given by their angles");
    bs->add_option("--angle1", bs_angle1, "lambda*tau_1 in radians (T=cos, R=sin)")->required();
    bs->add_option("--angle2", bs_angle2, "lambda*tau_2 in radians")->required();
    add_out_option(bs, out_path);

    // validate
    SpecOptions validate_opts;
    std::string validate_perm;
    auto* validate = app.add_subcommand(
        "validate", "Run the structural identity battery for a network spec");
    add_spec_options(validate, validate_opts);
    validate->add_option("--perm", validate_perm,
                         "Also validate synthesis for this permutation (1-based image list)");
    add_out_option(validate, out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "oscnet: error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (synth->parsed())
            return run_with_output(out_path, [&](std::ostream& out) {
                return run_synthesize(synth_opts, synth_perm, synth_format, out);
            });
        if (evolve->parsed())
            return run_with_output(out_path, [&](std::ostream& out) {
                const bool has_spec = evolve->count("--s") > 0;
                return run_evolve(has_spec ? std::optional<SpecOptions>(evolve_opts) : std::nullopt,
                                  evolve_coupling, evolve_t, evolve_route, evolve_format, out);
            });
        if (sweep->parsed())
            return run_with_output(out_path, [&](std::ostream& out) {
                return run_sweep_g(sweep_opts, sweep_site, sweep_t_min, sweep_t_max, sweep_steps,
                                   out);
            });
        if (check->parsed())
            return run_with_output(out_path, [&](std::ostream& out) {
                return run_transfer_check(check_opts, check_from, check_to, check_t, check_route,
                                          check_beta, out);
            });
        if (fock->parsed())
            return run_with_output(out_path, [&](std::ostream& out) {
                return run_fock_demo(fock_opts, fock_photon, out);
            });
        if (entangle->parsed())
            return run_with_output(out_path, [&](std::ostream& out) {
                return run_entangle_demo(entangle_opts, entangle_photon, out);
            });
        if (bs->parsed())
            return run_with_output(out_path, [&](std::ostream& out) {
                return run_bs_cascade(bs_angle1, bs_angle2, out);
            });
        if (validate->parsed())
            return run_with_output(out_path, [&](std::ostream& out) {
                return run_validate(validate_opts, validate_perm, out);
            });
    } catch (const std::invalid_argument& e) {
        std::cerr << "oscnet: error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "oscnet: internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
