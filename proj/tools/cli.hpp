#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lpa::cli {

enum ExitCode : int { ok = 0, usage = 2, input = 3, computation = 4 };

/// Runs one command line (without the program name) and writes a single JSON
/// document to `out`. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace lpa::cli
