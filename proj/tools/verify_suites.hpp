#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fpcutoff::cli {

struct CheckResult {
    std::string id;
    std::string description;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// suite: moments | transport | entropy_production | pde | all
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed, int threads);

}  // namespace fpcutoff::cli
