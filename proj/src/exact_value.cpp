#include "gausssum/exact_value.hpp"

#include <cfloat>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace gausssum {

double ComplexApprox::abs() const { return std::hypot(re, im); }

ComplexApprox approx_mul(const ComplexApprox& a, const ComplexApprox& b) {
    ComplexApprox p;
    p.re = a.re * b.re - a.im * b.im;
    p.im = a.re * b.im + a.im * b.re;
    const double ma = a.abs(), mb = b.abs();
    p.err = a.err * mb + b.err * ma + a.err * b.err + 4.0 * DBL_EPSILON * ma * mb;
    return p;
}

ComplexApprox approx_sub(const ComplexApprox& a, const ComplexApprox& b) {
    ComplexApprox d;
    d.re = a.re - b.re;
    d.im = a.im - b.im;
    d.err = a.err + b.err + 2.0 * DBL_EPSILON * (a.abs() + b.abs());
    return d;
}

SquarefreeSplit squarefree_split(std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("squarefree_split: m must be positive");
    std::int64_t square = 1, rest = 1;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square *= d;
        if (e % 2 == 1) rest *= d;
    }
    rest *= m;  // leftover prime
    return {square, rest};
}

ExactGaussValue ExactGaussValue::zero() { return ExactGaussValue(); }

ExactGaussValue ExactGaussValue::root8(const Rational& coeff, std::int64_t radicand,
                                       int octant) {
    if (radicand <= 0) throw std::invalid_argument("root8: radicand must be positive");
    const SquarefreeSplit split = squarefree_split(radicand);
    ExactGaussValue v;
    v.zero_ = false;
    v.coeff_ = coeff * Rational(split.square_part);
    v.radicand_ = split.squarefree;
    v.octant_ = ((octant % 8) + 8) % 8;
    return v;
}

ExactGaussValue ExactGaussValue::canonical(const Rational& coeff, std::int64_t radicand,
                                            int octant) {
    ExactGaussValue v;
    v.zero_ = false;
    v.coeff_ = coeff;
    v.radicand_ = radicand;
    v.octant_ = octant;
    return v;
}

ExactGaussValue ExactGaussValue::integer(std::int64_t n) { return root8(Rational(n), 1, 0); }

ExactGaussValue ExactGaussValue::sqrt_of(std::int64_t k) { return root8(Rational(1), k, 0); }

const Rational& ExactGaussValue::coeff() const {
    if (zero_) throw std::domain_error("coeff() of zero value");
    return coeff_;
}

std::int64_t ExactGaussValue::radicand() const {
    if (zero_) throw std::domain_error("radicand() of zero value");
    return radicand_;
}

int ExactGaussValue::octant() const {
    if (zero_) throw std::domain_error("octant() of zero value");
    return octant_;
}

bool operator==(const ExactGaussValue& a, const ExactGaussValue& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_ && a.octant_ == b.octant_;
}

ExactGaussValue mul(const ExactGaussValue& x, const ExactGaussValue& y) {
    if (x.is_zero() || y.is_zero()) return ExactGaussValue::zero();
    // √m·√m' = g·√(uv) with g = gcd(m,m'), m = gu, m' = gv. Since m and m'
    // are squarefree, u, v, g are pairwise coprime and uv is squarefree.
    const std::int64_t m1 = x.radicand(), m2 = y.radicand();
    const std::int64_t g = std::gcd(m1, m2);
    const std::int64_t uv = (m1 / g) * (m2 / g);
    return ExactGaussValue::canonical(x.coeff() * y.coeff() * Rational(g), uv,
                                      (x.octant() + y.octant()) % 8);
}

ExactGaussValue conj(const ExactGaussValue& x) {
    if (x.is_zero()) return x;
    return ExactGaussValue::canonical(x.coeff(), x.radicand(), (8 - x.octant()) % 8);
}

ExactGaussValue scale_sqrt(const ExactGaussValue& x, std::int64_t k) {
    if (k <= 0) throw std::invalid_argument("scale_sqrt: k must be positive");
    if (x.is_zero()) return x;
    return mul(x, ExactGaussValue::sqrt_of(k));
}

ExactGaussValue div(const ExactGaussValue& x, const ExactGaussValue& y) {
    if (y.is_zero()) throw std::domain_error("div: division by zero value");
    if (x.is_zero()) return x;
    // (c√m ζ₈^e)⁻¹ = (1/(cm))·√m·ζ₈^(8-e), since (√m)² = m.
    const ExactGaussValue inv = ExactGaussValue::canonical(
        Rational(y.coeff().den(), 1) / (Rational(y.coeff().num()) * Rational(y.radicand())),
        y.radicand(), (8 - y.octant()) % 8);
    return mul(x, inv);
}

ComplexApprox ExactGaussValue::to_complex() const {
    if (zero_) return ComplexApprox{0.0, 0.0, 0.0};
    const double mag = coeff_.to_double() * std::sqrt(static_cast<double>(radicand_));
    static const double kHalfSqrt2 = std::sqrt(0.5);
    // ζ₈^e component table; even octants are exact in binary floating point.
    static const double kRe[8] = {1, kHalfSqrt2, 0, -kHalfSqrt2, -1, -kHalfSqrt2, 0, kHalfSqrt2};
    static const double kIm[8] = {0, kHalfSqrt2, 1, kHalfSqrt2, 0, -kHalfSqrt2, -1, -kHalfSqrt2};
    ComplexApprox out;
    out.re = mag * kRe[octant_];
    out.im = mag * kIm[octant_];
    const bool exact_components = radicand_ == 1 && octant_ % 2 == 0 && coeff_.is_integer();
    out.err = mag * DBL_EPSILON * (exact_components ? 2.0 : 8.0);
    return out;
}

std::string ExactGaussValue::str() const {
    if (zero_) return "0";
    // Fold odd octants through ζ₈^e = (±1±i)/√2 so 1+i prints as "1+i".
    Rational c = coeff_;
    std::int64_t m = radicand_;
    const char* unit = nullptr;
    switch (octant_) {
        case 0: unit = ""; break;
        case 2: unit = "i"; break;
        case 4: unit = "-"; break;
        case 6: unit = "-i"; break;
        case 1: unit = "(1+i)"; break;
        case 3: unit = "(-1+i)"; break;
        case 5: unit = "(-1-i)"; break;
        case 7: unit = "(1-i)"; break;
    }
    if (octant_ % 2 == 1) {
        // c√m/√2: pull the factor of 2 out of (or into) the radicand.
        if (m % 2 == 0) {
            m /= 2;
        } else {
            c /= Rational(2);
            m *= 2;
        }
    }
    std::string mag;
    if (!c.is_one() || m == 1) mag = c.str();
    if (m != 1) {
        if (!mag.empty()) mag += "*";
        mag += "sqrt(" + std::to_string(m) + ")";
    }
    std::string u(unit);
    if (u.empty()) return mag;
    if (u == "i" || u == "-i") {
        if (mag == "1") return u;
        return (u == "-i" ? "-" + mag + "*i" : mag + "*i");
    }
    if (u == "-") return "-" + mag;
    // parenthesized unit; parens only needed under a coefficient
    if (mag == "1") return u.substr(1, u.size() - 2);
    return mag + "*" + u;
}

std::string ExactGaussValue::to_json() const {
    nlohmann::ordered_json j;
    if (zero_) {
        j["kind"] = "zero";
    } else {
        j["kind"] = "root8";
        j["coeff"] = coeff_.str();
        j["radicand"] = radicand_;
        j["octant"] = octant_;
    }
    return j.dump();
}

ExactGaussValue ExactGaussValue::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "zero") return zero();
    if (kind != "root8") throw std::invalid_argument("from_json: unknown kind '" + kind + "'");
    return root8(Rational::parse(j.at("coeff").get<std::string>()),
                 j.at("radicand").get<std::int64_t>(), j.at("octant").get<int>());
}

}  // namespace gausssum
