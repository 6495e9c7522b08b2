#include "gausssum/evaluator.hpp"

#include <cfloat>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gausssum/errors.hpp"

namespace gausssum {

namespace {

ExactGaussValue minus_one() { return ExactGaussValue::root8(Rational(1), 1, 4); }

std::int64_t nonneg_mod(std::int64_t x, std::int64_t m) {
    x %= m;
    return x < 0 ? x + m : x;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    const __int128 p = static_cast<__int128>(x) * y;
    if (p > INT64_MAX || p < INT64_MIN) throw std::overflow_error("eval_phi: overflow");
    return static_cast<std::int64_t>(p);
}

std::string phi_str(std::int64_t a, std::int64_t b) {
    return "phi(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

const char* step_rule_name(StepRule rule) {
    switch (rule) {
        case StepRule::ReduceNumerator: return "reduce";
        case StepRule::ZeroNumerator: return "zero-numerator";
        case StepRule::Split: return "split";
        case StepRule::StripScale: return "strip";
        case StepRule::OddPrimePower: return "odd-prime-power";
        case StepRule::TwoPower: return "two-power";
        case StepRule::Unit: return "unit";
    }
    return "?";
}

ExactGaussValue DerivationTrace::replay() const {
    ExactGaussValue v = ExactGaussValue::one();
    for (const TraceStep& s : steps) v = mul(v, s.factor);
    return v;
}

ExactGaussValue phi_base(std::int64_t a) {
    if (a < 1) throw std::invalid_argument("phi_base: a must be positive");
    switch (a % 4) {
        case 0: return ExactGaussValue::root8(Rational(1), 2, 1);  // 1+i
        case 1: return ExactGaussValue::one();
        case 2: return ExactGaussValue::zero();
        default: return ExactGaussValue::root8(Rational(1), 1, 2);  // i
    }
}

ExactGaussValue phi_odd_prime_power(std::int64_t p, int k, std::int64_t l) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("phi_odd_prime_power: p must be an odd prime");
    if (k < 1) throw std::invalid_argument("phi_odd_prime_power: k must be >= 1");
    if (l % p == 0) throw std::invalid_argument("phi_odd_prime_power: p divides l");
    if (k % 2 == 0) return ExactGaussValue::one();
    const ExactGaussValue base = phi_base(ipow(p, k));
    return legendre(l, p) == 1 ? base : mul(base, minus_one());
}

ExactGaussValue phi_two_power(int k, std::int64_t l) {
    if (k < 1) throw std::invalid_argument("phi_two_power: k must be >= 1");
    if (l % 2 == 0) throw std::invalid_argument("phi_two_power: l must be odd");
    if (k == 1) return ExactGaussValue::zero();  // Φ(2,2l) = (1+(-1)^l)/√2 = 0
    if (k >= 3 && k % 2 == 1)
        return ExactGaussValue::root8(Rational(1), 2, static_cast<int>(nonneg_mod(l, 8)));
    // k = 2 or k even ≥ 4: 1 + i^l, which is 1±i for odd l.
    return nonneg_mod(l, 4) == 1 ? ExactGaussValue::root8(Rational(1), 2, 1)
                                 : ExactGaussValue::root8(Rational(1), 2, 7);
}

EvalResult eval_phi(const GaussSumQuery& query, std::int64_t factor_bound) {
    const std::int64_t a = query.modulus;
    if (a < 1) throw std::invalid_argument("eval_phi: modulus must be positive");
    if (nonneg_mod(query.numerator, 2) != 0)
        throw std::invalid_argument("eval_phi: numerator must be even");

    EvalResult result;
    DerivationTrace& trace = result.trace;
    trace.modulus = a;
    trace.numerator = query.numerator;

    if (a == 1) {
        // Single term n = 0.
        trace.steps.push_back({StepRule::Unit, 1, query.numerator, ExactGaussValue::one(),
                               phi_str(1, query.numerator) + " = 1"});
        result.value = ExactGaussValue::one();
        return result;
    }

    const std::int64_t b = nonneg_mod(query.numerator, 2 * a);
    if (b != query.numerator)
        trace.steps.push_back({StepRule::ReduceNumerator, a, b, ExactGaussValue::one(),
                               phi_str(a, query.numerator) + " = " + phi_str(a, b)});
    if (b == 0) {
        const ExactGaussValue v = ExactGaussValue::sqrt_of(a);
        trace.steps.push_back({StepRule::ZeroNumerator, a, 0, v,
                               phi_str(a, 0) + " = sqrt(" + std::to_string(a) + ")"});
        result.value = v;
        return result;
    }

    const Factorization fact = factorize(a, factor_bound);
    if (fact.factors.size() > 1) {
        std::string note = phi_str(a, b) + " =";
        for (const auto& [p, e] : fact.factors) {
            const std::int64_t q = ipow(p, e);
            note += " " + phi_str(q, checked_mul(b, a / q));
        }
        trace.steps.push_back({StepRule::Split, a, b, ExactGaussValue::one(), note});
    }

    ExactGaussValue value = ExactGaussValue::one();
    for (const auto& [p, e] : fact.factors) {
        const std::int64_t q = ipow(p, e);
        // Piece numerator from the coprime split, reduced mod 2q (parity kept).
        const std::int64_t bq_raw = checked_mul(b, a / q);
        const std::int64_t bq = nonneg_mod(bq_raw, 2 * q);
        if (bq != bq_raw)
            trace.steps.push_back({StepRule::ReduceNumerator, q, bq, ExactGaussValue::one(),
                                   phi_str(q, bq_raw) + " = " + phi_str(q, bq)});
        ExactGaussValue piece;
        if (bq == 0) {
            piece = ExactGaussValue::sqrt_of(q);
            trace.steps.push_back({StepRule::ZeroNumerator, q, 0, piece,
                                   phi_str(q, 0) + " = sqrt(" + std::to_string(q) + ")"});
        } else {
            int v = 0;
            std::int64_t rest = bq;
            while (rest % p == 0) {
                rest /= p;
                ++v;
            }
            // Strip p^j with j chosen so the remaining numerator stays even:
            // the whole valuation for odd p, one less for p = 2. The mod-2q
            // reduction guarantees j < e (a nonzero even residue cannot
            // carry the full p^e for odd p, nor 2^(e+1) for p = 2).
            const int j = p == 2 ? v - 1 : v;
            if (j > 0) {
                const std::int64_t pj = ipow(p, j);
                const ExactGaussValue f = ExactGaussValue::sqrt_of(pj);
                trace.steps.push_back(
                    {StepRule::StripScale, q, bq, f,
                     phi_str(q, bq) + " = sqrt(" + std::to_string(pj) + ")*" +
                         phi_str(q / pj, bq / pj)});
            }
            const std::int64_t q2 = q / ipow(p, j);  // p^(e-j) ≥ p
            const std::int64_t b2 = bq / ipow(p, j);  // even, p-free for odd p
            ExactGaussValue base;
            if (p == 2)
                base = phi_two_power(e - j, b2 / 2);
            else
                base = phi_odd_prime_power(p, e - j, b2 / 2);
            trace.steps.push_back({p == 2 ? StepRule::TwoPower : StepRule::OddPrimePower,
                                   q2, b2, base, phi_str(q2, b2) + " = " + base.str()});
            piece = j > 0 ? scale_sqrt(base, ipow(p, j)) : base;
        }
        value = mul(value, piece);
    }
    result.value = value;
    return result;
}

ExactGaussValue eval_phi_assuming_ls(std::int64_t a, std::int64_t b,
                                     std::int64_t factor_bound) {
    if (a < 1) throw std::invalid_argument("eval_phi_assuming_ls: modulus must be positive");
    if (a % 2 != 0)
        throw std::invalid_argument("eval_phi_assuming_ls: modulus must be even");
    const std::int64_t br = nonneg_mod(b, 2 * a);
    if (br % 2 == 0) return eval_phi({a, br}, factor_bound).value;
    // Φ(a,b) = Φ(a,-a') with a' = 2a-b > 0 odd, and Φ(2B,-a') = Φ(a',2B)/√i
    // with 2B = a by the relation being assumed.
    const std::int64_t ap = 2 * a - br;
    const ExactGaussValue lhs = eval_phi({ap, a}, factor_bound).value;
    return mul(lhs, ExactGaussValue::root8(Rational(1), 1, 7));  // ζ₈⁻¹
}

ExactGaussValue reflection_product(std::int64_t p, int k, std::int64_t l) {
    if (!is_prime(p)) throw std::invalid_argument("reflection_product: p must be prime");
    if (k < 1) throw std::invalid_argument("reflection_product: k must be >= 1");
    if (l % p == 0)
        throw std::invalid_argument("reflection_product: l must be coprime to p");
    if (p == 2) return mul(phi_two_power(k, l), phi_two_power(k, -l));
    return mul(phi_odd_prime_power(p, k, l), phi_odd_prime_power(p, k, -l));
}

ComplexApprox approx_scale(const ComplexApprox& x, double factor) {
    ComplexApprox out{x.re * factor, x.im * factor, 0.0};
    out.err = x.err * factor + 2.0 * DBL_EPSILON * factor * x.abs();
    return out;
}

ComplexApprox approx_rot45(const ComplexApprox& x) {
    static const double c = std::sqrt(0.5);
    ComplexApprox out{c * (x.re - x.im), c * (x.re + x.im), 0.0};
    out.err = x.err + 4.0 * DBL_EPSILON * x.abs();
    return out;
}

bool approx_close(const ComplexApprox& x, const ComplexApprox& y, double tol,
                  double* difference) {
    const double d = std::hypot(x.re - y.re, x.im - y.im);
    if (difference) *difference = d;
    return d <= tol + x.err + y.err + 4.0 * DBL_EPSILON * (x.abs() + y.abs());
}

VerificationReport verify_ls(std::int64_t a, std::int64_t b, double tol,
                             std::int64_t sum_bound) {
    if (a < 1 || b < 1) throw std::invalid_argument("verify_ls: a and b must be positive");
    VerificationReport rep;
    rep.query = "LS a=" + std::to_string(a) + " b=" + std::to_string(b);
    rep.tolerance = tol;

    const ExactGaussValue lhs_exact = eval_phi({a, 2 * b}).value;
    const ComplexApprox lhs = lhs_exact.to_complex();
    const ComplexApprox lhs_direct = phi_numeric(a, 2 * b, sum_bound);
    rep.exact = lhs_exact;
    rep.lhs = lhs;

    // The closed form is only trusted once direct summation agrees with it
    // within the propagated error bounds; disagreement is a hard failure.
    double diff_cross = 0.0;
    if (!approx_close(lhs, lhs_direct, 0.0, &diff_cross)) {
        rep.rhs = lhs_direct;
        rep.difference = diff_cross;
        rep.pass = false;
        rep.failing_step = "exact-vs-direct";
        return rep;
    }

    const ComplexApprox rhs = approx_rot45(phi_numeric(2 * b, -a, sum_bound));
    rep.rhs = rhs;
    rep.pass = approx_close(lhs, rhs, tol, &rep.difference);
    if (!rep.pass) rep.failing_step = "relation";
    return rep;
}

namespace {

// Shared state for the step-by-step chain replay.
struct ChainChecker {
    double tol;
    std::int64_t sum_bound;
    VerificationReport* rep;
    bool failed = false;

    void fail(const std::string& step, double diff) {
        if (failed) return;
        failed = true;
        rep->failing_step = step;
        rep->difference = std::max(rep->difference, diff);
    }
    // Exact identities: structural equality, zero tolerance.
    void exact_eq(const std::string& step, const ExactGaussValue& x,
                  const ExactGaussValue& y) {
        if (failed) return;
        if (!(x == y)) fail(step, approx_sub(x.to_complex(), y.to_complex()).abs());
    }
    void numeric_eq(const std::string& step, const ComplexApprox& x,
                    const ComplexApprox& y) {
        if (failed) return;
        double d = 0.0;
        if (!approx_close(x, y, tol, &d)) fail(step, d);
    }
    // Every exact value whose direct sum is affordable gets cross-checked;
    // disagreement within the error bounds is a hard failure of the exact path.
    void cross_check(std::int64_t m, std::int64_t n, const ExactGaussValue& v) {
        if (failed) return;
        double d = 0.0;
        if (!approx_close(v.to_complex(), phi_numeric(m, n, sum_bound), 0.0, &d))
            fail("exact-vs-direct " + phi_str(m, n), d);
    }
};

}  // namespace

VerificationReport induction_check(std::int64_t a, std::int64_t b, std::int64_t p, int k,
                                   double tol, std::int64_t sum_bound) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("induction_check: a and b must be positive");
    if (!is_prime(p)) throw std::invalid_argument("induction_check: p must be prime");
    if (k < 1) throw std::invalid_argument("induction_check: k must be >= 1");
    if (std::gcd(p, a) != 1 || std::gcd(p, b) != 1)
        throw std::invalid_argument("induction_check: gcd(p,ab) must be 1");

    VerificationReport rep;
    rep.query = "induction a=" + std::to_string(a) + " b=" + std::to_string(b) +
                " p=" + std::to_string(p) + " k=" + std::to_string(k);
    rep.tolerance = tol;
    ChainChecker c{tol, sum_bound, &rep};

    const auto ev = [&](std::int64_t m, std::int64_t n) {
        return eval_phi({m, n}).value;
    };
    const auto num = [&](std::int64_t m, std::int64_t n) {
        return phi_numeric(m, n, sum_bound);
    };

    if (p != 2) {
        const std::int64_t A = ipow(p, k);
        const std::int64_t Aa = checked_mul(A, a);
        const std::int64_t big = checked_mul(2 * b, A);  // modulus 2bp^k

        const ExactGaussValue lhs = ev(a, big);             // Φ(a, 2bp^k)
        const ExactGaussValue whole = ev(Aa, 2 * b);        // Φ(p^k a, 2b)
        const ExactGaussValue refl_pos = ev(A, 2 * a * b);  // Φ(p^k, 2ab)
        const ExactGaussValue refl_neg = ev(A, -2 * a * b);
        c.cross_check(a, big, lhs);
        c.cross_check(A, 2 * a * b, refl_pos);
        c.cross_check(A, -2 * a * b, refl_neg);

        // Φ(p^k a, 2b) = Φ(p^k, 2ab)·Φ(a, 2bp^k)
        c.exact_eq("multiplication-split", whole, mul(refl_pos, lhs));
        // Φ(p^k a, 2b) = √i·Φ(2b, -p^k a)  (relation for the smaller numerator)
        const ComplexApprox hyp = num(2 * b, -Aa);
        c.numeric_eq("induction-hypothesis", whole.to_complex(), approx_rot45(hyp));
        // Φ(2bp^k, -a) = Φ(2b, -p^k a)·Φ(p^k, -2ab)
        const ComplexApprox rhs_full = num(big, -a);
        c.numeric_eq("multiplication-split-rhs", rhs_full,
                     approx_mul(hyp, refl_neg.to_complex()));
        // Φ(p^k, 2ab)·Φ(p^k, -2ab) = 1
        c.exact_eq("reflection", mul(refl_pos, refl_neg), ExactGaussValue::one());
        // Conclusion: Φ(a, 2bp^k) = √i·Φ(2bp^k, -a)
        const ComplexApprox rhs = approx_rot45(rhs_full);
        c.numeric_eq("conclusion", lhs.to_complex(), rhs);
        rep.exact = lhs;
        rep.lhs = lhs.to_complex();
        rep.rhs = rhs;
    } else {
        const std::int64_t T1 = ipow(2, k + 1);
        const std::int64_t T2 = ipow(2, k + 2);

        const ExactGaussValue lhs = ev(a, T1 * b);  // Φ(a, 2b·2^k)
        c.cross_check(a, T1 * b, lhs);

        // Φ(2^{k+1}a, b) = Φ(2^{k+1}, ab)·Φ(a, 2^{k+1}b)
        const ComplexApprox n_T1a_b = num(T1 * a, b);
        const ComplexApprox n_T1_ab = num(T1, a * b);
        c.numeric_eq("multiplication-split", n_T1a_b,
                     approx_mul(n_T1_ab, lhs.to_complex()));
        // Φ(2^{k+2}a, 2b) = √2·Φ(2^{k+1}a, b), Φ(2^{k+2}, 2ab) = √2·Φ(2^{k+1}, ab)
        const ExactGaussValue e_T2a = ev(T2 * a, 2 * b);
        const ExactGaussValue refl_pos = ev(T2, 2 * a * b);
        const ExactGaussValue refl_neg = ev(T2, -2 * a * b);
        c.cross_check(T2 * a, 2 * b, e_T2a);
        c.cross_check(T2, 2 * a * b, refl_pos);
        c.cross_check(T2, -2 * a * b, refl_neg);
        static const double kSqrt2 = std::sqrt(2.0);
        c.numeric_eq("scale-two", e_T2a.to_complex(), approx_scale(n_T1a_b, kSqrt2));
        c.numeric_eq("scale-two", refl_pos.to_complex(), approx_scale(n_T1_ab, kSqrt2));
        // Φ(2^{k+2}a, 2b) = √i·Φ(2b, -2^{k+2}a)  (relation, smaller numerator)
        c.numeric_eq("induction-hypothesis", e_T2a.to_complex(),
                     approx_rot45(num(2 * b, -T2 * a)));
        // Φ(2b, -2^{k+2}a) = √2·Φ(b, -2^{k+1}a), both exactly evaluable
        const ExactGaussValue e_half = ev(b, -T1 * a);
        c.cross_check(b, -T1 * a, e_half);
        c.exact_eq("scale-two-exact", ev(2 * b, -T2 * a), scale_sqrt(e_half, 2));
        // Φ(2^{k+1}b, -a) = Φ(2^{k+1}, -ab)·Φ(b, -2^{k+1}a)
        const ComplexApprox rhs_full = num(T1 * b, -a);
        const ComplexApprox n_T1_nab = num(T1, -a * b);
        c.numeric_eq("multiplication-split-rhs", rhs_full,
                     approx_mul(n_T1_nab, e_half.to_complex()));
        // Φ(2^{k+2}, -2ab) = √2·Φ(2^{k+1}, -ab)
        c.numeric_eq("scale-two", refl_neg.to_complex(), approx_scale(n_T1_nab, kSqrt2));
        // Φ(2^{k+2}, 2ab)·Φ(2^{k+2}, -2ab) = 2
        c.exact_eq("reflection", mul(refl_pos, refl_neg), ExactGaussValue::integer(2));
        // Conclusion: Φ(a, 2b·2^k) = √i·Φ(2b·2^k, -a)
        const ComplexApprox rhs = approx_rot45(rhs_full);
        c.numeric_eq("conclusion", lhs.to_complex(), rhs);
        rep.exact = lhs;
        rep.lhs = lhs.to_complex();
        rep.rhs = rhs;
    }
    rep.pass = !c.failed;
    if (rep.pass) rep.difference = approx_sub(rep.lhs, rep.rhs).abs();
    return rep;
}

}  // namespace gausssum
