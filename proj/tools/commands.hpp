#ifndef OSCNET_TOOLS_COMMANDS_HPP
#define OSCNET_TOOLS_COMMANDS_HPP

#include <optional>
#include <ostream>
#include <string>

#include "oscnet/network.hpp"

// One function per subcommand.  Each returns the process exit code: 0 on
// success, 2 when a numerical check fails.  Validation problems (bad flags,
// malformed specs, unreadable files) throw std::invalid_argument and are
// mapped to exit code 1 by main.

namespace oscnet::cli {

struct SpecOptions {
    int s = 0;
    double tau = 1.0;
    std::string m = "0";

    NetworkSpec to_spec() const;
};

int run_synthesize(const SpecOptions& opts, const std::string& perm, const std::string& format,
                   std::ostream& out);

int run_evolve(const std::optional<SpecOptions>& opts, const std::string& coupling_path,
               std::optional<double> t, const std::string& route, const std::string& format,
               std::ostream& out);

int run_sweep_g(const SpecOptions& opts, int site, double t_min, std::optional<double> t_max,
                int steps, std::ostream& out);

/// `beta` ("re" or "re,im"), when given, additionally verifies that the
/// reduced characteristic function of the coherent state |beta> launched from
/// site 1 is restored at the destination; requires from == 1.
int run_transfer_check(const SpecOptions& opts, int from, int to, std::optional<double> t,
                       const std::string& route, const std::string& beta, std::ostream& out);

int run_fock_demo(const SpecOptions& opts, int photon, std::ostream& out);

int run_entangle_demo(const SpecOptions& opts, int photon, std::ostream& out);

int run_bs_cascade(double angle1, double angle2, std::ostream& out);

int run_validate(const SpecOptions& opts, const std::string& perm, std::ostream& out);

}  // namespace oscnet::cli

#endif
