#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gausssum/exact_value.hpp"

namespace gausssum {

// Default cap on moduli for direct summation. Double precision with exact
// integer angle reduction keeps the propagated error well under 1e-6 far
// beyond this; raise per call when needed.
inline constexpr std::int64_t kDefaultSumBound = 1'000'000;
inline constexpr std::int64_t kDefaultCountBound = std::int64_t(1) << 31;

// Outcome of one identity instance checked numerically (and exactly when a
// closed form exists). pass ⇔ difference ≤ tolerance + propagated error.
struct VerificationReport {
    std::string query;
    std::optional<ExactGaussValue> exact;
    ComplexApprox lhs;
    ComplexApprox rhs;
    double difference = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::optional<std::string> failing_step;
};

// Φ(a,b) = a^(-1/2) Σ_{n=0}^{a-1} exp(πi n² b / a) by direct summation.
// The phase n²b is reduced mod 2a in exact integer arithmetic before any
// conversion to a real angle, so the only rounding is in the final sin/cos
// and the compensated accumulation; err = 32·a·ulp covers both.
ComplexApprox phi_numeric(std::int64_t a, std::int64_t b,
                          std::int64_t bound = kDefaultSumBound);

// Same sum for several numerators b over one modulus a, sharing the table of
// the 2a possible term values exp(πi r / a), r = 0..2a-1. Identical results
// and error bound as calling phi_numeric per numerator.
std::vector<ComplexApprox> phi_numeric_batch(std::int64_t a,
                                             std::span<const std::int64_t> numerators,
                                             std::int64_t bound = kDefaultSumBound);

// #{x in 0..m-1 : x² ≡ t (mod m)} by exhaustive enumeration.
std::int64_t count_sqrt_brute(std::int64_t t, std::int64_t m,
                              std::int64_t bound = kDefaultCountBound);

// All counts at once: result[n] = #{x : x² ≡ n (mod m)} via one pass over x.
std::vector<std::int64_t> count_sqrt_table(std::int64_t m,
                                           std::int64_t bound = kDefaultCountBound);

// #{(s,t) : 0 ≤ s < b, 0 ≤ t < a, as + bt > ab} by enumeration over the grid;
// a, b odd and coprime.
std::int64_t sylvester_brute(std::int64_t a, std::int64_t b,
                             std::int64_t bound = kDefaultCountBound);

// Checks the finite Fourier expansion of Φ(p^k, 2l):
//     Φ(p^k,2l) = p^(-k/2) Σ_n #{x : x² ≡ n mod p^k} exp(2πi n l / p^k)
// with the counts taken from exhaustive enumeration, against both direct
// summation and the closed-form evaluation. Requires gcd(l, p) = 1.
VerificationReport fourier_check(std::int64_t p, int k, std::int64_t l, double tol = 1e-6,
                                 std::int64_t bound = kDefaultSumBound);

}  // namespace gausssum
