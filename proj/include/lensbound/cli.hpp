#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lensbound {

// Parses argv-style arguments (program name excluded), runs the chosen
// subcommand, and writes results to out / diagnostics to err.
// Exit codes: 0 query answered (whatever the verdict), 1 invalid input,
// 2 internal invariant violation.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lensbound
