#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mz/bigint.hpp"
#include "mz/rational.hpp"
#include "mz/valuation.hpp"

#include <random>
#include <sstream>

using namespace mz;

TEST_CASE("decimal round-trip is the identity") {
    for (const char* s : {"0", "1", "-1", "123456789012345678901234567890",
                          "-998877665544332211009988776655443322110099887766554433221100"}) {
        CHECK(BigInt(std::string(s)).to_decimal() == s);
    }
    CHECK_THROWS_AS(BigInt(std::string("12x")), std::invalid_argument);
    CHECK_THROWS_AS(BigInt(std::string("")), std::invalid_argument);
}

TEST_CASE("canonical zero") {
    BigInt z(0);
    CHECK(z.is_zero());
    CHECK(z.sign() == 0);
    CHECK(z.to_decimal() == "0");
    CHECK(BigInt(std::string("-0")).to_decimal() == "0"); // no negative zero
    CHECK(BigInt(5) - BigInt(5) == z);
    CHECK((-z).to_decimal() == "0");
}

TEST_CASE("arithmetic basics") {
    BigInt a(std::string("123456789123456789"));
    BigInt b(std::string("-987654321"));
    CHECK((a + b).to_decimal() == "123456788135802468");
    CHECK((a * b).to_decimal() == "-121932631234567900112635269");
    CHECK(a - a == BigInt(0));
    CHECK(abs(b).to_decimal() == "987654321");
    CHECK(pow(BigInt(3), 20).to_decimal() == "3486784401");
    CHECK(gcd(BigInt(54), BigInt(-24)) == BigInt(6));
    CHECK(BigInt(54).divisible_by(BigInt(27)));
    CHECK_FALSE(BigInt(54).divisible_by(BigInt(7)));
    CHECK(BigInt(54).divexact(BigInt(27)) == BigInt(2));
}

TEST_CASE("addmul matches the long form on random values") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        BigInt a(static_cast<long>(rng() >> 16) - (1L << 46));
        BigInt b(static_cast<long>(rng() >> 16) - (1L << 46));
        BigInt c(static_cast<long>(rng() >> 16) - (1L << 46));
        BigInt lhs = a;
        lhs.add_mul(b, c);
        CHECK(lhs == a + b * c);
        BigInt lhs2 = a;
        lhs2.sub_mul(b, c);
        CHECK(lhs2 == a - b * c);
    }
}

TEST_CASE("ordering and stream output") {
    CHECK(BigInt(-3) < BigInt(2));
    CHECK(BigInt(2) < BigInt(10));
    std::ostringstream os;
    os << BigInt(std::string("-42"));
    CHECK(os.str() == "-42");
}

TEST_CASE("rational normalization: gcd one, positive denominator") {
    Rational r(BigInt(6), BigInt(-8));
    CHECK(r.num() == BigInt(-3));
    CHECK(r.den() == BigInt(4));
    CHECK(Rational(0, 7).den() == BigInt(1));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational arithmetic and comparisons") {
    Rational x(1, 3), y(1, 6);
    CHECK(x + y == Rational(1, 2));
    CHECK(x - y == y);
    CHECK(x * y == Rational(1, 18));
    CHECK(x / y == Rational(2));
    CHECK(y < x);
    CHECK(Rational(-1, 3) < Rational(1, 4));
    CHECK(Rational(5, 1).to_string() == "5");
    CHECK(Rational(-5, 10).to_string() == "-1/2");
    CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
    CHECK(Rational::from_string("7") == Rational(7));
}

TEST_CASE("valuation addition absorbs INFINITY, min is neutral") {
    Valuation two = Valuation::finite(2);
    Valuation five = Valuation::finite(5);
    Valuation inf = Valuation::infinity();
    CHECK(two + five == Valuation::finite(7));
    CHECK((two + inf).is_infinite());
    CHECK((inf + inf).is_infinite());
    CHECK(min(two, five) == two);
    CHECK(min(inf, five) == five);
    CHECK(min(inf, inf).is_infinite());
    CHECK(two < inf);
    CHECK(inf >= five);
    CHECK_THROWS_AS(inf.value(), std::domain_error);
}
