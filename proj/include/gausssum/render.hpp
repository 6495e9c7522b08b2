#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "gausssum/acceptance.hpp"
#include "gausssum/evaluator.hpp"
#include "gausssum/sweep.hpp"

namespace gausssum {

using ordered_json = nlohmann::ordered_json;

// Deterministic double rendering used in CSV cells (%.17g round-trips).
std::string format_double(double x);

ordered_json exact_to_json(const ExactGaussValue& v);
ordered_json approx_to_json(const ComplexApprox& c);
ordered_json report_to_json(const VerificationReport& r);
ordered_json summary_to_json(const SweepSummary& s, std::size_t max_failures = 20);
ordered_json trace_to_json(const DerivationTrace& t);
ordered_json criteria_to_json(const std::vector<CriterionResult>& results);

// Value tables for the CLI `table` subcommand. Kinds: "lemma1" (the four-case
// base table over a = 1..max), "prop10" (odd prime power p, k = 1..max_k),
// "prop11" (two-power, k = 1..max_k), "reflection" (conjugate products).
// Column order is fixed: inputs, exact value JSON, numeric re, numeric im.
struct TableOptions {
    std::string kind;
    std::int64_t max = 8;   // lemma1 row count
    std::int64_t p = 3;     // prop10 / reflection prime
    int max_k = 4;
    std::int64_t l = 1;
    std::int64_t sum_bound = kDefaultSumBound;
};

ordered_json make_table(const TableOptions& options);
std::string table_to_csv(const ordered_json& table);

}  // namespace gausssum
