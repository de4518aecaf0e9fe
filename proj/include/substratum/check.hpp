#pragma once

#include <string>
#include <vector>

#include "substratum/budget.hpp"
#include "substratum/substitution.hpp"

namespace substratum {

struct CheckResult {
    std::string name;
    bool passed = true;
    /// Set when the check did not apply to this input.
    bool skipped = false;
    std::string detail;
};

struct CheckOptions {
    /// Indices [−range, range] are compared against the oracle.
    Index range = 1000;
    /// Powers θ^k, k ≤ max_power, enter the power-invariance checks.
    unsigned max_power = 3;
};

/// Runs every module invariant on sub. Unseeded inputs use default_seed().
std::vector<CheckResult> run_checks(const Substitution& sub, const CheckOptions& options = {},
                                    const Budget& budget = Budget::from_env());

} // namespace substratum
