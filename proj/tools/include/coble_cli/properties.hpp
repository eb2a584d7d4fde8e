#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coble::cli {

struct PropertyResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;
};

// randomized identity suites, each with the given number of cases
std::vector<PropertyResult> run_property_suites(std::uint64_t seed, int cases = 200);

}  // namespace coble::cli
