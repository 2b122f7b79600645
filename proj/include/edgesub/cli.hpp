#pragma once

#include <string>
#include <vector>

namespace edgesub {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// The full command-line surface; `args` excludes the program name.
// Exit codes: 0 success, 1 verification failures, 2 parse errors,
// 3 capacity errors, 4 usage errors.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace edgesub
