#pragma once

#include <string>
#include <vector>

#include "glcoh/sandwich.hpp"

namespace glcoh {

struct VerifyOptions {
    int dmax = 4;          // sandwich-engine property grid
    std::vector<long long> primes = {2, 3, 5};
    int rmax = 2;
    int naive_dmax = 5;    // exhaustive Burnside-vs-naive bound
    int naive_random_cases = 100;  // extra random cases at naive_dmax + 1
    unsigned seed = 12345;
    SandwichConvention convention = SandwichConvention::standard;
};

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;  // counterexample or summary
};

/// Runs every property suite on the configured grid.
std::vector<PropertyResult> run_verification(const VerifyOptions& opts);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace glcoh
