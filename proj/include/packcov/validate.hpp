#pragma once

#include <string>
#include <vector>

#include "packcov/leaf.hpp"

namespace packcov {

struct CheckResult {
    std::string module;
    std::string name;
    bool pass = true;
    bool informational = false;  // measured and reported, never failing
    std::string detail;
};

struct ValidateOptions {
    std::string only_module;  // empty runs every module
    AlphaChordTerm alpha_term = AlphaChordTerm::scaled;
};

// Runs the whole invariant/property suite at default sizes. The alpha_term
// switch re-runs the leaf checks with the uncorrected closed form and is
// expected to fail them (negative control).
std::vector<CheckResult> run_validation(const ValidateOptions& opts = {});

// True when no non-informational check failed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace packcov
