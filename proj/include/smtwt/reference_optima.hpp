#ifndef SMTWT_REFERENCE_OPTIMA_HPP
#define SMTWT_REFERENCE_OPTIMA_HPP

#include <map>
#include <optional>
#include <string>

#include "smtwt/instance.hpp"

namespace smtwt {

// Published reference values for the total-tardiness suites (Rubin 401-708,
// Gagne 551-858), keyed by instance number. 851 and 855 are best known upper
// bounds, not proven optima.
const std::map<std::string, Cost>& reference_optima();

// Exact lookup first, then by the digits of the id ("Prob401" -> "401").
std::optional<Cost> lookup_reference(const std::string& id);

}  // namespace smtwt

#endif
