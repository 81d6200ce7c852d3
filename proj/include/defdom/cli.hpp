#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace defdom {

/// Runs one `defdom` subcommand. `args` excludes the program name.
/// Returns the process exit code: 0 success, 1 a failed verification,
/// 2 bad usage, unreadable input or an instance too large for the oracle.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace defdom
