#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gausssum {

// Default cap on arguments to factorize / count_sqrt_closed.
inline constexpr std::int64_t kDefaultFactorBound = std::int64_t(1) << 31;

// n = ∏ p^k with primes strictly increasing; value 1 has an empty factor list.
struct Factorization {
    std::int64_t value = 1;
    std::vector<std::pair<std::int64_t, int>> factors;
};

// Complete trial-division factorization of n, 1 ≤ n ≤ bound.
Factorization factorize(std::int64_t n, std::int64_t bound = kDefaultFactorBound);

// Deterministic trial-division primality test.
bool is_prime(std::int64_t n);

// (base^exp) mod m, exp ≥ 0, m ≥ 1.
std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m);

// p^k with overflow check.
std::int64_t ipow(std::int64_t p, int k);

// {p, j} when m = p^j for a prime p and j ≥ 1, otherwise nullopt.
std::optional<std::pair<std::int64_t, int>> as_prime_power(std::int64_t m);

// Legendre symbol (k/p) ∈ {-1,0,1} for an odd prime p, via Euler's criterion
// k^((p-1)/2) mod p. Negative k is reduced mod p first. Throws if p is not an
// odd prime.
int legendre(std::int64_t k, std::int64_t p);

// The question "how many x mod p^j satisfy x² ≡ t?", with t brought to
// canonical form: either t ≡ 0, or t = k·p^i with p ∤ k and 0 ≤ i < j.
struct SqrtCountQuery {
    std::int64_t target;    // t reduced into [0, p^j)
    std::int64_t prime;     // p
    int exponent;           // j ≥ 1
    bool target_is_zero;
    int unit_valuation;     // i  (valid when t ≠ 0)
    std::int64_t unit;      // k  (valid when t ≠ 0)

    static SqrtCountQuery make(std::int64_t t, std::int64_t p, int j);
};

// #{x ∈ Z/p^jZ : x² ≡ t} in closed form.
//
// Dispatch: t ≡ 0 → p^(j/2) (j even) or p^((j-1)/2) (j odd). Otherwise write
// t = k·p^i with p ∤ k; i odd → 0. For i even the count is p^(i/2) times the
// count of square roots of k mod p^(j-i): for odd p that is 1 + (k/p); for
// p = 2 it is, with r = j-i: r=1 → 1; r=2 → 2 iff k ≡ 1 (mod 4);
// r≥3 → 4 iff k ≡ 1 (mod 8), else 0.
std::int64_t count_sqrt_closed(const SqrtCountQuery& q);
std::int64_t count_sqrt_closed(std::int64_t t, std::int64_t p, int j);

// #{(s,t) : 0 ≤ s < b, 0 ≤ t < a, as + bt > ab} for coprime odd a, b; equals
// (a-1)(b-1)/2 in closed form (the enumeration lives in the oracle module).
std::int64_t sylvester_count(std::int64_t a, std::int64_t b);

}  // namespace gausssum
