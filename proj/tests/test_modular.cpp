#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "gausssum/errors.hpp"
#include "gausssum/modular.hpp"
#include "gausssum/oracle.hpp"

using namespace gausssum;

TEST_CASE("factorize examples") {
    const Factorization f12 = factorize(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == std::pair<std::int64_t, int>{2, 2});
    CHECK(f12.factors[1] == std::pair<std::int64_t, int>{3, 1});

    CHECK(factorize(1).factors.empty());

    const Factorization f = factorize(9999);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<std::int64_t, int>{3, 2});
    CHECK(f.factors[1] == std::pair<std::int64_t, int>{11, 1});
    CHECK(f.factors[2] == std::pair<std::int64_t, int>{101, 1});

    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK_THROWS_AS(factorize(1001, 1000), bound_error);
}

TEST_CASE("factorization reassembles and uses primes in increasing order") {
    for (std::int64_t n = 1; n <= 5000; ++n) {
        const Factorization f = factorize(n);
        std::int64_t prod = 1, last = 1;
        for (const auto& [p, k] : f.factors) {
            CHECK(is_prime(p));
            CHECK(p > last);
            last = p;
            prod *= ipow(p, k);
        }
        CHECK(prod == n);
    }
}

TEST_CASE("legendre examples") {
    for (const std::int64_t p : {3, 5, 7, 11, 97}) CHECK(legendre(1, p) == 1);
    CHECK(legendre(2, 5) == -1);  // squares mod 5 are {0,1,4}
    CHECK(legendre(3, 5) == -1);
    CHECK(legendre(4, 5) == 1);
    CHECK(legendre(10, 5) == 0);
    CHECK(legendre(-1, 5) == 1);   // -1 = 4 mod 5
    CHECK(legendre(-1, 7) == -1);  // -1 = 6 mod 7, not a square
    CHECK_THROWS_AS(legendre(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(legendre(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(legendre(2, 9), std::invalid_argument);
}

TEST_CASE("legendre matches square enumeration and is multiplicative") {
    for (std::int64_t p = 3; p <= 100; p += 2) {
        if (!is_prime(p)) continue;
        std::vector<bool> is_square(static_cast<std::size_t>(p), false);
        for (std::int64_t x = 0; x < p; ++x)
            is_square[static_cast<std::size_t>(x * x % p)] = true;
        for (std::int64_t k = 1; k < p; ++k)
            CHECK(legendre(k, p) == (is_square[static_cast<std::size_t>(k)] ? 1 : -1));
        for (std::int64_t k1 = 1; k1 < p; ++k1)
            for (std::int64_t k2 = 1; k2 < p; ++k2)
                CHECK(legendre(k1 * k2, p) == legendre(k1, p) * legendre(k2, p));
    }
}

TEST_CASE("count_sqrt_closed examples") {
    CHECK(count_sqrt_closed(0, 2, 3) == 2);   // x in {0,4} mod 8
    CHECK(count_sqrt_closed(1, 2, 3) == 4);   // x in {1,3,5,7} mod 8
    CHECK(count_sqrt_closed(27, 3, 4) == 0);  // 27 = 3^3, odd valuation
    CHECK(count_sqrt_closed(4, 3, 2) == 2);   // x in {2,7} mod 9
    CHECK_THROWS_AS(count_sqrt_closed(1, 6, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_sqrt_closed(1, 3, 0), std::invalid_argument);
}

TEST_CASE("query decomposition is canonical") {
    const SqrtCountQuery q = SqrtCountQuery::make(27, 3, 4);
    CHECK(q.target == 27);
    CHECK_FALSE(q.target_is_zero);
    CHECK(q.unit_valuation == 3);
    CHECK(q.unit == 1);

    const SqrtCountQuery z = SqrtCountQuery::make(81, 3, 4);  // 81 = 0 mod 81
    CHECK(z.target_is_zero);

    const SqrtCountQuery neg = SqrtCountQuery::make(-1, 5, 2);
    CHECK(neg.target == 24);
    CHECK(neg.unit_valuation == 0);
    CHECK(neg.unit == 24);
}

TEST_CASE("closed counts match enumeration for all prime powers up to 512") {
    for (std::int64_t p = 2; p <= 512; ++p) {
        if (!is_prime(p)) continue;
        for (int j = 1; ipow(p, j) <= 512; ++j) {
            const std::int64_t q = ipow(p, j);
            const auto counts = count_sqrt_table(q);
            std::int64_t mass = 0;
            for (std::int64_t t = 0; t < q; ++t) {
                CHECK(count_sqrt_closed(t, p, j) == counts[static_cast<std::size_t>(t)]);
                mass += counts[static_cast<std::size_t>(t)];
            }
            CHECK(mass == q);  // each x contributes exactly one square
        }
    }
}

TEST_CASE("sylvester closed form") {
    CHECK(sylvester_count(3, 5) == 4);
    CHECK(sylvester_count(1, 7) == 0);
    CHECK(sylvester_count(7, 9) == 24);
    CHECK_THROWS_AS(sylvester_count(3, 9), std::invalid_argument);  // gcd = 3
    CHECK_THROWS_AS(sylvester_count(4, 9), std::invalid_argument);  // even
}

TEST_CASE("sylvester closed form equals enumeration up to 49") {
    for (std::int64_t a = 1; a <= 49; a += 2)
        for (std::int64_t b = 1; b <= 49; b += 2)
            if (std::gcd(a, b) == 1) CHECK(sylvester_count(a, b) == sylvester_brute(a, b));
}

TEST_CASE("prime power recognition") {
    CHECK(as_prime_power(8) == std::pair<std::int64_t, int>{2, 3});
    CHECK(as_prime_power(9) == std::pair<std::int64_t, int>{3, 2});
    CHECK(as_prime_power(97) == std::pair<std::int64_t, int>{97, 1});
    CHECK_FALSE(as_prime_power(12).has_value());
    CHECK_FALSE(as_prime_power(1).has_value());
}

TEST_CASE("powmod") {
    CHECK(powmod(2, 10, 1000) == 24);
    CHECK(powmod(7, 0, 13) == 1);
    CHECK(powmod(-3, 3, 7) == powmod(4, 3, 7));
    CHECK(powmod(123456789, 2, 1) == 0);
}
