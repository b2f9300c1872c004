#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mz/errors.hpp"
#include "mz/numbers.hpp"

#include <random>

using namespace mz;

TEST_CASE("trial-division primality") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(9));
    CHECK(is_prime(9973));
    CHECK_FALSE(is_prime(9991)); // 97 * 103
    CHECK(next_prime(13) == 17);
}

TEST_CASE("int_valuation examples") {
    CHECK(int_valuation(BigInt(54), 3) == Valuation::finite(3)); // 54 = 2*27
    CHECK(int_valuation(binomial(3, 2), 3) == Valuation::finite(1));
    CHECK(int_valuation(BigInt(0), 5).is_infinite());
    CHECK(int_valuation(BigInt(-12), 2) == Valuation::finite(2));
    CHECK_THROWS_AS(int_valuation(BigInt(10), 6), NotPrime);
}

TEST_CASE("valuation is additive with INFINITY absorbing") {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (int i = 0; i < 100; ++i) {
            long m = static_cast<long>(rng() % 10000) - 5000;
            long n = static_cast<long>(rng() % 10000) - 5000;
            Valuation vm = int_valuation(BigInt(m), p);
            Valuation vn = int_valuation(BigInt(n), p);
            CHECK(int_valuation(BigInt(m) * BigInt(n), p) == vm + vn);
        }
        CHECK((int_valuation(BigInt(0), p) + Valuation::finite(3)).is_infinite());
    }
}

TEST_CASE("mobius examples") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);  // two prime factors
    CHECK(mobius(12) == 0); // 4 | 12
    CHECK(mobius(2) == -1);
    CHECK(mobius(30) == -1);
}

TEST_CASE("mobius sums over divisors vanish for n >= 2") {
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        int sum = 0;
        for (std::uint64_t k : divisors(n)) sum += mobius(k);
        if (n == 1) {
            CHECK(sum == 1);
        } else {
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("divisors and prime factors") {
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(prime_factors(12) == std::vector<std::uint64_t>{2, 3});
    CHECK(prime_factors(97) == std::vector<std::uint64_t>{97});
}

TEST_CASE("factorial valuation via Legendre") {
    CHECK(factorial_valuation(10, 2) == 8);
    CHECK(factorial_valuation(10, 3) == 4);
    CHECK(factorial_valuation(2, 5) == 0);
    // cross-check against the factorial itself
    for (std::uint64_t n : {1ull, 7ull, 20ull}) {
        for (std::uint64_t p : {2ull, 3ull, 7ull}) {
            CHECK(int_valuation(factorial(n), p) == Valuation::finite(factorial_valuation(n, p)));
        }
    }
}

TEST_CASE("trial factorization and divisor enumeration") {
    Factorization f = trial_factor(BigInt(-1944), 100);
    CHECK(f.complete());
    CHECK(f.factors.at(2) == 3);
    CHECK(f.factors.at(3) == 5);
    auto divs = all_divisors(f, 1000);
    CHECK(divs.size() == 24);
    CHECK(divs.front() == BigInt(1));
    CHECK(divs.back() == BigInt(1944));

    // incomplete: a large prime survives the bound
    Factorization g = trial_factor(BigInt(std::string("2932031007403")), 100); // prime
    CHECK_FALSE(g.complete());
    CHECK(all_divisors(g, 1000).empty());

    // the below-bound-squared shortcut still finishes composites
    Factorization h = trial_factor(BigInt(4 * 10007), 200);
    CHECK(h.complete());
    CHECK(h.factors.at(10007) == 1);
}
