#pragma once

#include <string>
#include <vector>

namespace edgesub {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteOptions {
    long ell = 3;
};

// Named verification suites behind the `verify` subcommand:
//   fixed-points     uniform fixed points of the torus shift action
//   basis-identity   colourful count vs. weighted cpHom combination
//   tutte-identities deletion-contraction, aggregation, sum-over-k
std::vector<std::string> verify_suite_names();
std::vector<CheckResult> run_verify_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace edgesub
