#pragma once

#include <string>
#include <vector>

namespace amoeba {

/// Runs the command-line tool on the given arguments (without argv[0]).
/// Returns the process exit code: 0 success, 1 invalid input or failure,
/// 2 guard refusal. Report text is appended to `out`.
int run_cli(const std::vector<std::string>& args, std::string& out);

}  // namespace amoeba
