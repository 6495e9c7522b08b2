#include "gausssum/modular.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "gausssum/errors.hpp"

namespace gausssum {

Factorization factorize(std::int64_t n, std::int64_t bound) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    if (n > bound)
        throw bound_error("factorize: " + std::to_string(n) + " exceeds bound " +
                          std::to_string(bound));
    Factorization f;
    f.value = n;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        f.factors.emplace_back(d, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("powmod: modulus must be positive");
    if (exp < 0) throw std::invalid_argument("powmod: negative exponent");
    base %= m;
    if (base < 0) base += m;
    std::int64_t result = 1 % m;
    while (exp > 0) {
        if (exp & 1)
            result = static_cast<std::int64_t>(static_cast<__int128>(result) * base % m);
        base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % m);
        exp >>= 1;
    }
    return result;
}

std::int64_t ipow(std::int64_t p, int k) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) {
        if (r > INT64_MAX / p) throw std::overflow_error("ipow: overflow");
        r *= p;
    }
    return r;
}

std::optional<std::pair<std::int64_t, int>> as_prime_power(std::int64_t m) {
    if (m < 2) return std::nullopt;
    const Factorization f = factorize(m);
    if (f.factors.size() != 1) return std::nullopt;
    return f.factors.front();
}

int legendre(std::int64_t k, std::int64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("legendre: p must be an odd prime");
    k %= p;
    if (k < 0) k += p;
    if (k == 0) return 0;
    const std::int64_t e = powmod(k, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

SqrtCountQuery SqrtCountQuery::make(std::int64_t t, std::int64_t p, int j) {
    if (!is_prime(p)) throw std::invalid_argument("SqrtCountQuery: p must be prime");
    if (j < 1) throw std::invalid_argument("SqrtCountQuery: exponent must be >= 1");
    const std::int64_t pj = ipow(p, j);
    t %= pj;
    if (t < 0) t += pj;
    SqrtCountQuery q{t, p, j, t == 0, 0, 0};
    if (t != 0) {
        std::int64_t k = t;
        while (k % p == 0) {
            k /= p;
            ++q.unit_valuation;
        }
        q.unit = k;
    }
    return q;
}

std::int64_t count_sqrt_closed(const SqrtCountQuery& q) {
    const std::int64_t p = q.prime;
    const int j = q.exponent;
    if (q.target_is_zero) return ipow(p, j / 2);  // j/2 rounds down for odd j
    const int i = q.unit_valuation;
    if (i % 2 == 1) return 0;
    const std::int64_t lift = ipow(p, i / 2);
    const std::int64_t k = q.unit;
    const int r = j - i;  // count roots of k mod p^r, then multiply by p^(i/2)
    if (p != 2) return lift * (1 + legendre(k, p));
    if (r == 1) return lift;
    if (r == 2) return k % 4 == 1 ? 2 * lift : 0;
    return k % 8 == 1 ? 4 * lift : 0;
}

std::int64_t count_sqrt_closed(std::int64_t t, std::int64_t p, int j) {
    return count_sqrt_closed(SqrtCountQuery::make(t, p, j));
}

std::int64_t sylvester_count(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1 || a % 2 == 0 || b % 2 == 0)
        throw std::invalid_argument("sylvester_count: a and b must be odd positive");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("sylvester_count: a and b must be coprime");
    return (a - 1) * (b - 1) / 2;
}

}  // namespace gausssum
