#ifndef OSCNET_TOOLS_CLI_IO_HPP
#define OSCNET_TOOLS_CLI_IO_HPP

#include <string>
#include <vector>

#include "oscnet/char_states.hpp"
#include "oscnet/coupling.hpp"
#include "oscnet/propagator.hpp"

// Serialization for the command line tool.  All floating-point output goes
// through format_double (17 significant digits, '.' separator, no locale), so
// identical inputs produce byte-identical files; 17 digits also round-trip
// doubles exactly through the JSON path.

namespace oscnet::cli {

std::string format_double(double value);

/// "--m 0" broadcasts to all sites; "--m 0,1,0" must match s exactly.
std::vector<int> parse_m_list(const std::string& text, int s);

/// 1-based image list "2,3,1" meaning site k is sent to site image[k].
PermutationMatrix parse_permutation(const std::string& text);

/// {"s":int,"tau":float,"m":[int],"re":[[float]],"im":[[float]]}, row-major.
std::string coupling_to_json(const CouplingMatrix& lambda);
CouplingMatrix coupling_from_json(const std::string& text);

/// CSV rows "j,k,re,im" with 1-based indices.
std::string coupling_to_csv(const CouplingMatrix& lambda);

std::string propagator_to_json(const Propagator& prop);
std::string propagator_to_csv(const Propagator& prop);

/// CSV schema "t_over_tau,g", one row per grid point, LF endings.
std::string gseries_to_csv(const GSeries& series);

}  // namespace oscnet::cli

#endif
