#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "gausssum/errors.hpp"
#include "gausssum/evaluator.hpp"
#include "gausssum/oracle.hpp"

using namespace gausssum;
using cd = std::complex<double>;

namespace {
cd to_cd(const ComplexApprox& c) { return {c.re, c.im}; }
}

TEST_CASE("phi_numeric examples") {
    const ComplexApprox one = phi_numeric(1, 12345);
    CHECK(one.re == 1.0);
    CHECK(one.im == 0.0);

    CHECK(std::abs(to_cd(phi_numeric(4, 2)) - cd(1, 1)) < 1e-12);
    CHECK(std::abs(to_cd(phi_numeric(5, 2)) - cd(1, 0)) < 1e-12);
    CHECK(std::abs(to_cd(phi_numeric(6, 2))) < 1e-12);

    CHECK_THROWS_AS(phi_numeric(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(phi_numeric(1001, 2, 1000), bound_error);
}

TEST_CASE("reference sum computed the slow way agrees") {
    // naive angle computation, no integer reduction; fine at tiny sizes
    for (std::int64_t a = 1; a <= 40; ++a) {
        for (std::int64_t b = -9; b <= 9; ++b) {
            cd s = 0;
            for (std::int64_t n = 0; n < a; ++n)
                s += std::exp(cd(0, M_PI * double(n) * double(n) * double(b) / double(a)));
            s /= std::sqrt(double(a));
            CHECK(std::abs(to_cd(phi_numeric(a, b)) - s) < 1e-9);
        }
    }
}

TEST_CASE("periodicity mod 2a") {
    for (std::int64_t a = 1; a <= 500; ++a) {
        // b sampled across [-4a, 4a], endpoints included
        const std::int64_t step = std::max<std::int64_t>(1, a / 2);
        for (std::int64_t b = -4 * a; b <= 4 * a; b += step) {
            const ComplexApprox x = phi_numeric(a, b);
            const ComplexApprox y = phi_numeric(a, ((b % (2 * a)) + 2 * a) % (2 * a));
            CHECK(std::abs(to_cd(x) - to_cd(y)) <= 2 * (x.err + y.err));
        }
    }
}

TEST_CASE("negating the numerator conjugates the sum") {
    for (std::int64_t a = 1; a <= 500; a += 3) {
        for (std::int64_t b : {1, 2, 7, -5, 12, 101}) {
            const ComplexApprox x = phi_numeric(a, b);
            const ComplexApprox y = phi_numeric(a, -b);
            CHECK(std::abs(to_cd(x) - std::conj(to_cd(y))) <= 2 * (x.err + y.err));
        }
    }
}

TEST_CASE("batched summation equals per-call summation") {
    std::vector<std::int64_t> numerators;
    for (std::int64_t l = -21; l <= 21; ++l) numerators.push_back(l);
    for (const std::int64_t a : {1, 2, 7, 36, 225, 1024}) {
        const auto batch = phi_numeric_batch(a, numerators);
        REQUIRE(batch.size() == numerators.size());
        for (std::size_t i = 0; i < numerators.size(); ++i) {
            const ComplexApprox single = phi_numeric(a, numerators[i]);
            CHECK(batch[i].re == single.re);
            CHECK(batch[i].im == single.im);
            CHECK(batch[i].err == single.err);
        }
    }
}

TEST_CASE("count_sqrt_brute examples") {
    CHECK(count_sqrt_brute(0, 8) == 2);
    CHECK(count_sqrt_brute(1, 8) == 4);
    CHECK(count_sqrt_brute(2, 4) == 0);   // squares mod 4 are {0,1}
    CHECK(count_sqrt_brute(-3, 4) == 2);  // -3 = 1 mod 4, x in {1,3}
    CHECK_THROWS_AS(count_sqrt_brute(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(count_sqrt_brute(0, 100, 50), bound_error);
}

TEST_CASE("count table matches per-target counts") {
    for (const std::int64_t m : {1, 2, 12, 25, 64, 100}) {
        const auto table = count_sqrt_table(m);
        for (std::int64_t t = 0; t < m; ++t)
            CHECK(table[static_cast<std::size_t>(t)] == count_sqrt_brute(t, m));
    }
}

TEST_CASE("sylvester enumeration examples") {
    CHECK(sylvester_brute(3, 5) == 4);  // (2,2),(3,2),(4,2),(4,1)
    CHECK(sylvester_brute(1, 7) == 0);
    CHECK(sylvester_brute(5, 7) == 12);
    CHECK_THROWS_AS(sylvester_brute(3, 9), std::invalid_argument);
}

TEST_CASE("fourier expansion examples") {
    const VerificationReport a = fourier_check(3, 2, 1);
    CHECK(a.pass);
    CHECK(std::abs(to_cd(a.lhs) - cd(1, 0)) < 1e-9);

    const VerificationReport b = fourier_check(2, 3, 1);
    CHECK(b.pass);
    CHECK(std::abs(to_cd(b.lhs) - cd(1, 1)) < 1e-9);

    const VerificationReport c = fourier_check(5, 1, 2);
    CHECK(c.pass);
    CHECK(std::abs(to_cd(c.lhs) - cd(-1, 0)) < 1e-9);

    CHECK_THROWS_AS(fourier_check(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(fourier_check(3, 1, 6), std::invalid_argument);
}

TEST_CASE("fourier expansion across small prime powers") {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        for (int k = 1; ipow(p, k) <= 256; ++k) {
            for (std::int64_t l : {1, -1, 3, -3}) {
                if (l % p == 0) continue;
                CHECK(fourier_check(p, k, l).pass);
            }
        }
    }
    // the tail of the p^k <= 2048 range not touched by the acceptance sweep
    for (std::int64_t p = 2001; p <= 2048; ++p) {
        if (!is_prime(p)) continue;
        for (std::int64_t l : {1, -1, 3, -3}) CHECK(fourier_check(p, 1, l).pass);
    }
}
