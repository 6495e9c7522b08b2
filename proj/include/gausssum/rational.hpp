#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gausssum {

// Positive rational with int64 numerator/denominator, always reduced.
// Coefficients of exact Gauss-sum values are strictly positive, so no sign
// handling is needed; attempts to build a non-positive rational throw.
class Rational {
  public:
    Rational() : num_(1), den_(1) {}
    Rational(std::int64_t num, std::int64_t den = 1) {
        if (num <= 0 || den <= 0)
            throw std::invalid_argument("Rational: numerator and denominator must be positive");
        const std::int64_t g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator*(const Rational& a, const Rational& b) {
        // Cross-reduce first so intermediates stay small.
        const std::int64_t g1 = std::gcd(a.num_, b.den_);
        const std::int64_t g2 = std::gcd(b.num_, a.den_);
        return from_product(a.num_ / g1, b.num_ / g2, a.den_ / g2, b.den_ / g1);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        return a * Rational(b.den_, b.num_);
    }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "p" when integral, "p/q" otherwise; decimal-free by construction.
    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Parses the str() format back; accepts "p" and "p/q".
    static Rational parse(const std::string& s) {
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("Rational::parse: bad rational string '" + s + "'");
        }
    }

  private:
    static Rational from_product(std::int64_t n1, std::int64_t n2, std::int64_t d1,
                                 std::int64_t d2) {
        const __int128 n = static_cast<__int128>(n1) * n2;
        const __int128 d = static_cast<__int128>(d1) * d2;
        if (n > INT64_MAX || d > INT64_MAX) throw std::overflow_error("Rational: overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace gausssum
