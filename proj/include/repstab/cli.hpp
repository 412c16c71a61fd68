#pragma once

#include <string>
#include <vector>

namespace repstab {

/// Exit status plus captured streams, so tests can drive the surface
/// in-process. Exit codes: 0 ok, 1 computation error, 2 usage error.
struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args);

}  // namespace repstab
