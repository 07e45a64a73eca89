#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pptrack {

// Randomized cross-checks between the closed-form analyses and the
// invariant-set oracle. This is the end-to-end safety net: every sampled
// instance must show exact agreement between the two independent routes.
struct VerifyConfig {
    std::uint64_t seed = 1;
    long per_class = 500;
    long cmax = 6;
    long oracle_cap = 20000;
    long max_periods = 64;
};

struct VerifyReport {
    long boundary_checked = 0;
    long under_checked = 0;
    long over_checked = 0;
    std::vector<std::string> failures;
    double seconds = 0.0;

    bool ok() const { return failures.empty(); }
};

VerifyReport run_verification_sweep(const VerifyConfig& cfg);

}  // namespace pptrack
