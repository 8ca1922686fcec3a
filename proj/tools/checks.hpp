#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adele/signs.hpp"

namespace adele::checks {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;  // not part of any report
};

struct SuiteOptions {
    uint64_t seed = 0;
    int ext_bound = 6;
    SignConventions signs = kSignConventions;
};

CheckResult riemann_roch(const SuiteOptions& opt);
CheckResult weil_reciprocity(const SuiteOptions& opt);
CheckResult intersection(const SuiteOptions& opt);
CheckResult parshin(const SuiteOptions& opt);
CheckResult weil_pairing(const SuiteOptions& opt);
CheckResult chain_invariance(const SuiteOptions& opt);
CheckResult dlog_bounds(const SuiteOptions& opt);
CheckResult sign_audit(const SuiteOptions& opt);

/// All checks in a fixed order.
std::vector<CheckResult> run_suite(const SuiteOptions& opt);

}  // namespace adele::checks
