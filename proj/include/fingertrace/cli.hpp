#pragma once

#include <string>
#include <vector>

namespace fingertrace {

/// Runs the command line tool. `args` excludes the program name.
/// Returns the process exit code: 0 success, 1 usage error, 2 processing
/// failure (single-frame commands, or batch --strict with failed frames).
int run_cli(std::vector<std::string> args);

}  // namespace fingertrace
