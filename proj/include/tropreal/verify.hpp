#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tropreal {

struct VerifyCheck {
    std::string name;
    int trials = 0;
    int mismatches = 0;
    std::string first_failure;
};

struct VerifyResult {
    std::vector<VerifyCheck> checks;
    bool ok() const;
};

// Randomized cross-checks between independent computations of the same quantity.
VerifyResult run_verify(std::uint32_t seed, int trials);

}  // namespace tropreal
