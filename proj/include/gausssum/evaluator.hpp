#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gausssum/exact_value.hpp"
#include "gausssum/modular.hpp"
#include "gausssum/oracle.hpp"

namespace gausssum {

// Φ(a,b) = a^(-1/2) Σ_{n=0}^{a-1} exp(πi n² b / a). The value only depends on
// b mod 2a.
struct GaussSumQuery {
    std::int64_t modulus;    // a ≥ 1
    std::int64_t numerator;  // b, any sign
};

// One rule application in the evaluation pipeline. Structural steps carry
// factor 1; base evaluations and √k-scalings carry their multiplicative
// contribution, so the product of all factors reproduces the result.
enum class StepRule {
    ReduceNumerator,  // b ↦ b mod 2a
    ZeroNumerator,    // Φ(a,0) = √a
    Split,            // Φ(xy,l) = Φ(x,yl)·Φ(y,xl), gcd(x,y) = 1
    StripScale,       // Φ(ka,kb) = √k·Φ(a,b), k a prime power dividing both
    OddPrimePower,    // Φ(p^k,2l), p odd prime, p ∤ l
    TwoPower,         // Φ(2^k,2l), l odd
    Unit,             // Φ(1,b) = 1
};
const char* step_rule_name(StepRule rule);

struct TraceStep {
    StepRule rule;
    std::int64_t modulus;    // sub-query this step applies to
    std::int64_t numerator;
    ExactGaussValue factor;
    std::string note;
};

struct DerivationTrace {
    std::int64_t modulus = 1;
    std::int64_t numerator = 0;
    std::vector<TraceStep> steps;

    // Product of all step factors; equals the evaluation result.
    ExactGaussValue replay() const;
};

struct EvalResult {
    ExactGaussValue value;
    DerivationTrace trace;
};

// Gauss's evaluation of Φ(a,2), a ≥ 1, by the residue of a mod 4:
//   a ≡ 0 → 1+i,  a ≡ 1 → 1,  a ≡ 2 → 0,  a ≡ 3 → i.
ExactGaussValue phi_base(std::int64_t a);

// Φ(p^k,2l) for an odd prime p with p ∤ l: 1 for k even, (l/p)·Φ(p^k,2) for
// k odd.
ExactGaussValue phi_odd_prime_power(std::int64_t p, int k, std::int64_t l);

// Φ(2^k,2l) for odd l: zero for k = 1, 1+i^l for k = 2 and all even k ≥ 4,
// √2·ζ₈^l for odd k ≥ 3.
ExactGaussValue phi_two_power(int k, std::int64_t l);

// Exact evaluation of Φ(a,b) for even b: reduce b mod 2a, split a into prime
// powers, strip shared prime powers out of each piece (keeping the numerator
// even), evaluate the prime-power bases, multiply. Throws on odd b.
EvalResult eval_phi(const GaussSumQuery& query,
                    std::int64_t factor_bound = kDefaultFactorBound);

// Exact Φ(a,b) for EVEN modulus a and arbitrary b, obtained by applying the
// Landsberg-Schaar relation itself (assumes-LS: this is a convenience for
// consumers that trust the relation; the verifier never calls it).
ExactGaussValue eval_phi_assuming_ls(std::int64_t a, std::int64_t b,
                                     std::int64_t factor_bound = kDefaultFactorBound);

// Φ(p^k,2l)·Φ(p^k,-2l) in exact arithmetic; equals 1 for odd p and 2 for
// p = 2, k ≥ 3 (for p = 2, k ∈ {1,2} the directly computed product is 0
// resp. 2). Requires gcd(p,l) = 1.
ExactGaussValue reflection_product(std::int64_t p, int k, std::int64_t l);

// Checks the Landsberg-Schaar relation Φ(a,2b) = √i·Φ(2b,-a) for one pair:
// the left side exactly (cross-checked against direct summation within the
// propagated error bounds), the right side by direct summation only.
VerificationReport verify_ls(std::int64_t a, std::int64_t b, double tol = 1e-6,
                             std::int64_t sum_bound = kDefaultSumBound);

// Replays the chain of identities that extends the Landsberg-Schaar relation
// from numerator 2b to 2bp^k, step by step: multiplication splits, √2
// scalings and the reflection identity are checked exactly where every
// numerator involved is even, numerically otherwise; the steps that invoke
// the relation for the smaller numerator are checked numerically. Requires
// gcd(p, ab) = 1. Reports the first failing step, if any.
VerificationReport induction_check(std::int64_t a, std::int64_t b, std::int64_t p, int k,
                                   double tol = 1e-6,
                                   std::int64_t sum_bound = kDefaultSumBound);

// ComplexApprox helpers for the identity checks.
ComplexApprox approx_scale(const ComplexApprox& x, double factor);
ComplexApprox approx_rot45(const ComplexApprox& x);  // multiply by exp(iπ/4)
bool approx_close(const ComplexApprox& x, const ComplexApprox& y, double tol,
                  double* difference = nullptr);

}  // namespace gausssum
