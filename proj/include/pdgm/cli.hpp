#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdgm {

/// Dispatches one CLI invocation (arguments without the program name).
/// Exit codes: 0 success, 1 input or usage error, 2 property violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdgm
