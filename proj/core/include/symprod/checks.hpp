#pragma once

#include <string>
#include <vector>

namespace symprod::checks {

enum class Family { small, full };

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;  // case count when passed, first mismatch when not
};

// Runs every cross-validation suite in a fixed order. `full` widens the
// parameter ranges; `small` matches the documented runtime budget.
std::vector<SuiteResult> run_all(Family family);

}  // namespace symprod::checks
