#include "gausssum/oracle.hpp"

#include <cfloat>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gausssum/errors.hpp"
#include "gausssum/evaluator.hpp"
#include "gausssum/modular.hpp"

namespace gausssum {

namespace {

// Error-bound constant for the direct sums: per-term sin/cos and angle
// rounding stay below ~30 ulp, and compensated summation keeps accumulation
// at the same order, so 32·a·ulp is a conservative bound on the normalized
// sum for every a ≥ 1.
constexpr double kSumErrC = 32.0;

struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

std::int64_t check_sum_modulus(std::int64_t a, std::int64_t bound) {
    if (a < 1) throw std::invalid_argument("phi_numeric: modulus must be positive");
    if (a > bound)
        throw bound_error("phi_numeric: modulus " + std::to_string(a) + " exceeds bound " +
                          std::to_string(bound));
    return 2 * a;
}

// Non-negative residue of b mod m.
std::int64_t reduce_mod(std::int64_t b, std::int64_t m) {
    b %= m;
    return b < 0 ? b + m : b;
}

}  // namespace

ComplexApprox phi_numeric(std::int64_t a, std::int64_t b, std::int64_t bound) {
    const std::int64_t period = check_sum_modulus(a, bound);
    const std::int64_t bp = reduce_mod(b, period);
    const std::int64_t step2 = reduce_mod(2 * bp, period);
    const double inv_a = 1.0 / static_cast<double>(a);
    KahanSum re, im;
    // r = n²b mod 2a and d = (2n+1)b mod 2a, advanced by additions only.
    std::int64_t r = 0, d = bp;
    for (std::int64_t n = 0; n < a; ++n) {
        const double angle = M_PI * (static_cast<double>(r) * inv_a);
        re.add(std::cos(angle));
        im.add(std::sin(angle));
        r += d;
        if (r >= period) r -= period;
        d += step2;
        if (d >= period) d -= period;
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(a));
    return ComplexApprox{re.s * norm, im.s * norm,
                         kSumErrC * static_cast<double>(a) * DBL_EPSILON};
}

std::vector<ComplexApprox> phi_numeric_batch(std::int64_t a,
                                             std::span<const std::int64_t> numerators,
                                             std::int64_t bound) {
    const std::int64_t period = check_sum_modulus(a, bound);
    constexpr std::int64_t kTableLimit = std::int64_t(1) << 21;
    if (period > kTableLimit) {
        std::vector<ComplexApprox> out;
        out.reserve(numerators.size());
        for (const std::int64_t b : numerators) out.push_back(phi_numeric(a, b, bound));
        return out;
    }
    std::vector<double> tre(static_cast<std::size_t>(period));
    std::vector<double> tim(static_cast<std::size_t>(period));
    const double inv_a = 1.0 / static_cast<double>(a);
    for (std::int64_t rr = 0; rr < period; ++rr) {
        const double angle = M_PI * (static_cast<double>(rr) * inv_a);
        tre[static_cast<std::size_t>(rr)] = std::cos(angle);
        tim[static_cast<std::size_t>(rr)] = std::sin(angle);
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(a));
    const double err = kSumErrC * static_cast<double>(a) * DBL_EPSILON;
    std::vector<ComplexApprox> out;
    out.reserve(numerators.size());
    for (const std::int64_t b : numerators) {
        const std::int64_t bp = reduce_mod(b, period);
        const std::int64_t step2 = reduce_mod(2 * bp, period);
        KahanSum re, im;
        std::int64_t r = 0, d = bp;
        for (std::int64_t n = 0; n < a; ++n) {
            re.add(tre[static_cast<std::size_t>(r)]);
            im.add(tim[static_cast<std::size_t>(r)]);
            r += d;
            if (r >= period) r -= period;
            d += step2;
            if (d >= period) d -= period;
        }
        out.push_back(ComplexApprox{re.s * norm, im.s * norm, err});
    }
    return out;
}

std::int64_t count_sqrt_brute(std::int64_t t, std::int64_t m, std::int64_t bound) {
    if (m < 1) throw std::invalid_argument("count_sqrt_brute: modulus must be positive");
    if (m > bound)
        throw bound_error("count_sqrt_brute: modulus " + std::to_string(m) +
                          " exceeds bound " + std::to_string(bound));
    t = reduce_mod(t, m);
    std::int64_t count = 0;
    for (std::int64_t x = 0; x < m; ++x)
        if (static_cast<std::int64_t>(static_cast<__int128>(x) * x % m) == t) ++count;
    return count;
}

std::vector<std::int64_t> count_sqrt_table(std::int64_t m, std::int64_t bound) {
    if (m < 1) throw std::invalid_argument("count_sqrt_table: modulus must be positive");
    constexpr std::int64_t kMemLimit = std::int64_t(1) << 26;
    if (m > bound || m > kMemLimit)
        throw bound_error("count_sqrt_table: modulus " + std::to_string(m) +
                          " exceeds bound");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
    for (std::int64_t x = 0; x < m; ++x)
        ++counts[static_cast<std::size_t>(static_cast<__int128>(x) * x % m)];
    return counts;
}

std::int64_t sylvester_brute(std::int64_t a, std::int64_t b, std::int64_t bound) {
    if (a < 1 || b < 1 || a % 2 == 0 || b % 2 == 0)
        throw std::invalid_argument("sylvester_brute: a and b must be odd positive");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("sylvester_brute: a and b must be coprime");
    if (a > bound / b)
        throw bound_error("sylvester_brute: a*b exceeds bound " + std::to_string(bound));
    const std::int64_t ab = a * b;
    std::int64_t count = 0;
    for (std::int64_t s = 0; s < b; ++s)
        for (std::int64_t t = 0; t < a; ++t)
            if (a * s + b * t > ab) ++count;
    return count;
}

VerificationReport fourier_check(std::int64_t p, int k, std::int64_t l, double tol,
                                 std::int64_t bound) {
    if (!is_prime(p)) throw std::invalid_argument("fourier_check: p must be prime");
    if (k < 1) throw std::invalid_argument("fourier_check: k must be >= 1");
    if (l % p == 0) throw std::invalid_argument("fourier_check: l must be coprime to p");
    const std::int64_t m = ipow(p, k);
    if (m > bound)
        throw bound_error("fourier_check: p^k = " + std::to_string(m) + " exceeds bound " +
                          std::to_string(bound));

    const std::vector<std::int64_t> counts = count_sqrt_table(m, bound);
    const std::int64_t lp = reduce_mod(l, m);
    const double two_pi_over_m = 2.0 * M_PI / static_cast<double>(m);
    KahanSum re, im;
    std::int64_t r = 0;  // n·l mod m
    for (std::int64_t n = 0; n < m; ++n) {
        const double cnt = static_cast<double>(counts[static_cast<std::size_t>(n)]);
        if (cnt != 0.0) {
            const double angle = two_pi_over_m * static_cast<double>(r);
            re.add(cnt * std::cos(angle));
            im.add(cnt * std::sin(angle));
        }
        r += lp;
        if (r >= m) r -= m;
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(m));
    // Σ counts = m, so the weighted sum carries the same error budget as an
    // m-term direct sum.
    const ComplexApprox fourier{re.s * norm, im.s * norm,
                                32.0 * static_cast<double>(m) * DBL_EPSILON};
    const ComplexApprox direct = phi_numeric(m, 2 * l, bound);
    const ExactGaussValue closed =
        p == 2 ? phi_two_power(k, l) : phi_odd_prime_power(p, k, l);
    const ComplexApprox closed_ca = closed.to_complex();

    VerificationReport rep;
    rep.query = "fourier p=" + std::to_string(p) + " k=" + std::to_string(k) +
                " l=" + std::to_string(l);
    rep.exact = closed;
    rep.lhs = fourier;
    rep.rhs = direct;
    rep.tolerance = tol;
    const double d_direct = approx_sub(fourier, direct).abs();
    const double d_closed = approx_sub(fourier, closed_ca).abs();
    rep.difference = std::max(d_direct, d_closed);
    const bool direct_ok = d_direct <= tol + fourier.err + direct.err;
    const bool closed_ok = d_closed <= tol + fourier.err + closed_ca.err;
    rep.pass = direct_ok && closed_ok;
    if (!direct_ok)
        rep.failing_step = "fourier-vs-direct";
    else if (!closed_ok)
        rep.failing_step = "fourier-vs-closed";
    return rep;
}

}  // namespace gausssum
