#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gausssum {

struct AcceptanceOptions {
    double tol = 1e-6;
    int workers = 0;  // 0 → available parallelism
    // The induction replay sums moduli up to 2·50·31⁴ ≈ 9.3e7; the double
    // summation error stays well under tol there (32·a·ulp ≈ 6.6e-7).
    std::int64_t induction_sum_bound = std::int64_t(1) << 28;
    std::uint64_t seed = 20250809;  // tuple sampling for the induction replay
    std::ostream* log = nullptr;    // one line per criterion as it finishes
};

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::int64_t total = 0;
    std::int64_t failures = 0;
    double seconds = 0.0;
    std::string detail;  // first failure description, empty when passed
};

// Runs the eight verification criteria at their pinned ranges/tolerances.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

bool all_passed(const std::vector<CriterionResult>& results);

std::string criterion_line(const CriterionResult& r);

}  // namespace gausssum
