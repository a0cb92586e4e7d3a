#pragma once
#include <string>
#include <vector>

namespace cylpack {

/// Run the command-line front end; `args` excludes the program name.
/// Exit codes: 0 success, 1 verification failure, 2 usage error,
/// 3 generation error, 4 input format error.
int run_cli(std::vector<std::string> args);

} // namespace cylpack
