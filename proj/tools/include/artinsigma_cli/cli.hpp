#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace artinsigma::cli {

enum ExitCode : int { ok = 0, input_error = 1, consistency_error = 2 };

/// Runs one command. `args` excludes the program name. The text report goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artinsigma::cli
