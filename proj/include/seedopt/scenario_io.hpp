#pragma once

#include <string>

#include "seedopt/types.hpp"

namespace seedopt {

/// Parses the sectioned scenario format:
///
///   [types]
///   labels = campus city
///   mu     = 0.3 0.7
///   [kernel_good]
///   row = 4 1
///   row = 1 2
///   [kernel_bad]
///   row = 0.8 0.2
///   row = 0.2 0.4
///   [model]
///   lambda = 1.5
///   n      = 100000
///
/// '#' starts a comment. Errors carry file:line context. The returned
/// scenario has passed validate_scenario.
Scenario parse_scenario(const std::string& path);

Scenario parse_scenario_text(const std::string& text, const std::string& origin = "<string>");

/// Canonical emission; parse_scenario_text(emit_scenario(s)) == s exactly.
std::string emit_scenario(const Scenario& s);

/// Shortest decimal form that round-trips the double exactly.
std::string format_double(double v);

} // namespace seedopt
