#pragma once

#include <cstdint>
#include <string>

#include "gausssum/rational.hpp"

namespace gausssum {

// Numeric shadow of an exact value: re + i*im with a conservative absolute
// error bound err on |true value - (re + i*im)|.
struct ComplexApprox {
    double re = 0.0;
    double im = 0.0;
    double err = 0.0;

    double abs() const;
};

ComplexApprox approx_mul(const ComplexApprox& a, const ComplexApprox& b);
ComplexApprox approx_sub(const ComplexApprox& a, const ComplexApprox& b);

// Exact arithmetic in the closed algebra {0} ∪ {c·√m·ζ₈^e} with c a positive
// rational, m a squarefree positive integer, e ∈ {0,…,7}, ζ₈ = exp(iπ/4).
// Every closed-form value of a normalized quadratic Gauss sum Φ(a,2l) lives
// here, and the algebra is closed under the products, conjugates, √k-scalings
// and divisions the evaluation pipeline performs.
//
// Canonical form is unique: √8 is stored as 2·√2, the zero value is its own
// variant (never coeff 0), so structural equality coincides with equality of
// the represented complex numbers.
class ExactGaussValue {
  public:
    // Default-constructs the zero value.
    ExactGaussValue() : zero_(true), radicand_(1), octant_(0) {}

    // The additive zero.
    static ExactGaussValue zero();
    // c·√m·ζ₈^e; m need not be squarefree (its square part folds into c),
    // e is reduced mod 8. m must be positive.
    static ExactGaussValue root8(const Rational& coeff, std::int64_t radicand, int octant);
    // The positive integer n, shorthand for root8(n, 1, 0).
    static ExactGaussValue integer(std::int64_t n);
    static ExactGaussValue one() { return integer(1); }
    // √k for a positive integer k.
    static ExactGaussValue sqrt_of(std::int64_t k);

    bool is_zero() const { return zero_; }
    // Accessors are only meaningful on nonzero values.
    const Rational& coeff() const;
    std::int64_t radicand() const;
    int octant() const;

    ComplexApprox to_complex() const;

    friend bool operator==(const ExactGaussValue& a, const ExactGaussValue& b);
    friend bool operator!=(const ExactGaussValue& a, const ExactGaussValue& b) {
        return !(a == b);
    }

    // Human-readable exact rendering, e.g. "0", "1", "i", "1+i", "sqrt(3)*i",
    // "1/2*sqrt(2)*(1+i)".
    std::string str() const;

    // JSON encoding: {"kind":"zero"} or
    // {"kind":"root8","coeff":"p/q","radicand":m,"octant":e}.
    std::string to_json() const;
    static ExactGaussValue from_json(const std::string& text);

  private:
    // Trusted constructor for radicands already known squarefree.
    static ExactGaussValue canonical(const Rational& coeff, std::int64_t radicand, int octant);

    friend ExactGaussValue mul(const ExactGaussValue&, const ExactGaussValue&);
    friend ExactGaussValue conj(const ExactGaussValue&);
    friend ExactGaussValue div(const ExactGaussValue&, const ExactGaussValue&);

    bool zero_;
    Rational coeff_;
    std::int64_t radicand_;
    int octant_;
};

ExactGaussValue mul(const ExactGaussValue& x, const ExactGaussValue& y);
ExactGaussValue conj(const ExactGaussValue& x);
// Multiplies by √k, k a positive integer, re-canonicalizing the radicand.
ExactGaussValue scale_sqrt(const ExactGaussValue& x, std::int64_t k);
// x·y⁻¹; throws std::domain_error when y is zero.
ExactGaussValue div(const ExactGaussValue& x, const ExactGaussValue& y);

// m = square*square*rest with rest squarefree; returns {square, rest}.
struct SquarefreeSplit {
    std::int64_t square_part;  // g with g² | m
    std::int64_t squarefree;   // m / g²
};
SquarefreeSplit squarefree_split(std::int64_t m);

}  // namespace gausssum
