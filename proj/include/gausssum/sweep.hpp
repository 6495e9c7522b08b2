#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gausssum/oracle.hpp"

namespace gausssum {

// Result of running one check over a grid of cases.
struct SweepSummary {
    std::string description;
    std::int64_t total = 0;
    std::int64_t passes = 0;
    std::vector<VerificationReport> failures;  // ordered by case index
    double wall_seconds = 0.0;
};

int default_workers();

// Evaluates check(i) for i in 0..total-1 across `workers` threads; a returned
// report counts the case as failed. Work is handed out in dynamic blocks but
// failures are merged back in index order, so the outcome is independent of
// the worker count.
SweepSummary run_sweep(const std::string& description, std::int64_t total, int workers,
                       const std::function<std::optional<VerificationReport>(std::int64_t)>& check);

}  // namespace gausssum
