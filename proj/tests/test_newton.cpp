#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mz/dynatomic.hpp"
#include "mz/errors.hpp"
#include "mz/newton.hpp"
#include "mz/numbers.hpp"

#include <random>

using namespace mz;

namespace {

NewtonPolygon polygon_of(unsigned d, unsigned m, std::uint64_t p) {
    return newton_polygon(misiurewicz(FamilyParams{d, m, 1}, Variable::b).misiurewicz, p);
}

std::vector<PolygonPoint> verts(std::initializer_list<std::pair<std::size_t, std::uint64_t>> v) {
    std::vector<PolygonPoint> out;
    for (auto [i, val] : v) out.push_back({i, val});
    return out;
}

IntPoly random_poly_with_valuations(std::mt19937_64& rng, std::uint64_t p, std::size_t max_deg,
                                    bool nonzero_constant) {
    std::size_t deg = 1 + rng() % max_deg;
    std::vector<BigInt> c(deg + 1, BigInt(0));
    for (std::size_t i = 0; i <= deg; ++i) {
        if (i != 0 && i != deg && rng() % 4 == 0) continue; // sprinkle zero coefficients
        long unit = static_cast<long>(rng() % 200) - 100;
        if (unit == 0) unit = 1;
        while (unit % static_cast<long>(p) == 0) ++unit;
        c[i] = BigInt(unit) * pow(BigInt(static_cast<long>(p)), rng() % 7);
    }
    if (nonzero_constant && c[0].is_zero()) c[0] = BigInt(1 + static_cast<long>(rng() % 5));
    if (c[deg].is_zero()) c[deg] = BigInt(1);
    return IntPoly(Variable::x, std::move(c));
}

} // namespace

TEST_CASE("polygon of the first Misiurewicz polynomial at d = 3") {
    // -3b - 9 at p = 3
    NewtonPolygon np = newton_polygon(IntPoly(Variable::b, {-9, -3}), 3);
    CHECK(np.zero_prefix() == 0);
    CHECK(np.vertices() == verts({{0, 2}, {1, 1}}));
    auto segs = segments(np);
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].slope == Rational(-1));
    CHECK(segs[0].hlen == 1);
    CHECK(segs[0].denom() == 1);
}

TEST_CASE("polygon of the second Misiurewicz polynomial at d = 3") {
    NewtonPolygon np = polygon_of(3, 2, 3);
    CHECK(np.vertices() == verts({{0, 8}, {5, 5}, {6, 6}}));
    auto segs = segments(np);
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].slope == Rational(-3, 5));
    CHECK(segs[0].hlen == 5);
    CHECK(segs[0].denom() == 5);
    CHECK(segs[1].slope == Rational(1));
    CHECK(segs[1].hlen == 1);
}

TEST_CASE("polygon of tau at m = 3, d = 3: zero prefix and the five-vertex shape") {
    SigmaTau st = sigma_tau(FamilyParams{3, 3, 1});
    NewtonPolygon np = newton_polygon(st.tau, 3);
    CHECK(np.zero_prefix() == 3);
    CHECK(np.vertices() == verts({{3, 13}, {4, 12}, {9, 9}, {10, 10}}));
}

TEST_CASE("single-vertex polygon has no segments") {
    NewtonPolygon np = newton_polygon(IntPoly(Variable::x, {7}), 3);
    CHECK(np.vertices() == verts({{0, 0}}));
    CHECK(segments(np).empty());
    CHECK(lattice_point_count(np) == 1);
    CHECK(factor_bound(np) == 0);
    CHECK_FALSE(is_eisenstein(np));
}

TEST_CASE("zero polynomial and composite prime are rejected") {
    CHECK_THROWS_AS(newton_polygon(IntPoly(Variable::x), 3), ZeroPolynomial);
    CHECK_THROWS_AS(newton_polygon(IntPoly(Variable::x, {1, 1}), 6), NotPrime);
}

TEST_CASE("hull soundness on random polynomials") {
    std::mt19937_64 rng(31337);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (int rep = 0; rep < 60; ++rep) {
            IntPoly f = random_poly_with_valuations(rng, p, 12, false);
            NewtonPolygon np = newton_polygon(f, p);
            auto vals = coefficient_valuations(f, p);
            const auto& vs = np.vertices();
            CHECK(vs.front().index == f.trailing_zeros());
            CHECK(vs.back().index == f.degree());
            // every finite point on or above the hull; vertices from the point set
            for (const PolygonPoint& v : vs) {
                REQUIRE(v.index < vals.size());
                CHECK(vals[v.index] == Valuation::finite(v.val));
            }
            for (std::size_t seg = 0; seg + 1 < vs.size(); ++seg) {
                const auto& l = vs[seg];
                const auto& r = vs[seg + 1];
                for (std::size_t i = l.index; i <= r.index; ++i) {
                    if (vals[i].is_infinite()) continue;
                    // (v_i - v_l)(r_i - l_i) >= (v_r - v_l)(i - l_i)
                    long lhs = (static_cast<long>(vals[i].value()) - static_cast<long>(l.val)) *
                               static_cast<long>(r.index - l.index);
                    long rhs = (static_cast<long>(r.val) - static_cast<long>(l.val)) *
                               static_cast<long>(i - l.index);
                    CHECK(lhs >= rhs);
                }
            }
            // slopes strictly increase
            auto segs = segments(np);
            for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
                CHECK(segs[i].slope < segs[i + 1].slope);
            }
        }
    }
}

TEST_CASE("lattice point counts and factor bounds") {
    CHECK(lattice_point_count(polygon_of(3, 1, 3)) == 2);
    CHECK(factor_bound(polygon_of(3, 1, 3)) == 1);
    CHECK(lattice_point_count(polygon_of(3, 2, 3)) == 3);
    CHECK(factor_bound(polygon_of(3, 2, 3)) == 2);
    // x^2 - 1 at p = 2: flat hull through (1, 0)
    NewtonPolygon np = newton_polygon(IntPoly(Variable::x, {-1, 0, 1}), 2);
    CHECK(lattice_point_count(np) == 3);
    CHECK(factor_bound(np) == 2);
    // nonzero constant required
    NewtonPolygon shifted = newton_polygon(IntPoly(Variable::x, {0, 1, 1}), 2);
    CHECK_THROWS_AS(lattice_point_count(shifted), NonzeroConstantRequired);
    CHECK_THROWS_AS(is_eisenstein(shifted), NonzeroConstantRequired);
    CHECK_THROWS_AS(factor_degree_candidates(shifted), NonzeroConstantRequired);
}

TEST_CASE("Eisenstein polygon recognition") {
    CHECK(is_eisenstein(polygon_of(3, 1, 3)));
    NewtonPolygon g3 = polygon_of(3, 3, 3);
    CHECK(g3.vertices() == verts({{0, 26}, {17, 17}}));
    CHECK(is_eisenstein(g3)); // gcd(17, 9) = 1
    CHECK_FALSE(is_eisenstein(newton_polygon(IntPoly(Variable::x, {-1, 0, 1}), 2)));
    CHECK_FALSE(is_eisenstein(polygon_of(3, 2, 3))); // two segments
}

TEST_CASE("classical Eisenstein-by-construction polynomials are recognized") {
    std::mt19937_64 rng(2718);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        for (int rep = 0; rep < 25; ++rep) {
            std::size_t deg = 2 + rng() % 9;
            std::vector<BigInt> c(deg + 1);
            for (std::size_t i = 0; i < deg; ++i) {
                // p | c_i, p^2 does not divide c_0
                long u = static_cast<long>(rng() % 50) - 25;
                c[i] = BigInt(static_cast<long>(p)) * BigInt(u);
            }
            long u0 = 1 + static_cast<long>(rng() % 20);
            while (u0 % static_cast<long>(p) == 0) ++u0;
            c[0] = BigInt(static_cast<long>(p)) * BigInt(u0);
            long lead = 1 + static_cast<long>(rng() % 30);
            while (lead % static_cast<long>(p) == 0) ++lead;
            c[deg] = BigInt(lead);
            NewtonPolygon np = newton_polygon(IntPoly(Variable::x, std::move(c)), p);
            CHECK(is_eisenstein(np));
            CHECK(factor_degree_candidates(np).empty());
        }
    }
}

TEST_CASE("concatenation examples") {
    NewtonPolygon n1 = newton_polygon(IntPoly(Variable::x, {1, 1}), 2);
    NewtonPolygon n2 = newton_polygon(IntPoly(Variable::x, {2, 1}), 2);
    NewtonPolygon prod = newton_polygon(IntPoly(Variable::x, {2, 3, 1}), 2);
    CHECK(concat({n1, n2}) == prod);
    CHECK(concat({n2}) == n2);

    // zero prefixes add: b * 3 * G_2 in one go
    NewtonPolygon nb = newton_polygon(IntPoly(Variable::b, {0, 1}), 3);
    NewtonPolygon n3 = newton_polygon(IntPoly(Variable::b, {3}), 3);
    NewtonPolygon g2 = polygon_of(3, 2, 3);
    IntPoly big = IntPoly(Variable::b, {0, 3}) * misiurewicz(FamilyParams{3, 2, 1}, Variable::b)
                                                     .misiurewicz;
    CHECK(concat({nb, n3, g2}) == newton_polygon(big, 3));
    CHECK(newton_polygon(big, 3).zero_prefix() == 1);

    CHECK_THROWS_AS(concat({n1, polygon_of(3, 1, 3)}), PrimeMismatch);
    CHECK_THROWS_AS(concat({}), std::invalid_argument);
}

TEST_CASE("product law on random pairs") {
    std::mt19937_64 rng(8675309);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        for (int rep = 0; rep < 40; ++rep) {
            IntPoly f = random_poly_with_valuations(rng, p, 9, true);
            IntPoly g = random_poly_with_valuations(rng, p, 9, true);
            CHECK(concat({newton_polygon(f, p), newton_polygon(g, p)}) ==
                  newton_polygon(f * g, p));
        }
    }
}

TEST_CASE("factor degree candidates") {
    CHECK(factor_degree_candidates(polygon_of(3, 2, 3)) == std::set<std::size_t>{1, 5});
    CHECK(factor_degree_candidates(polygon_of(3, 1, 3)).empty());
    // slope -1/2 over length 2: splits only as 0 or 2, both excluded
    IntPoly quad(Variable::x, {2, 2, 1});
    CHECK(factor_degree_candidates(newton_polygon(quad, 2)).empty());
    // flat segments allow every split
    NewtonPolygon flat = newton_polygon(IntPoly(Variable::x, {-1, 0, 0, 1}), 2);
    CHECK(factor_degree_candidates(flat) == std::set<std::size_t>{1, 2});
}

TEST_CASE("factor bound equals one plus the interior split points") {
    std::mt19937_64 rng(606);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (int rep = 0; rep < 30; ++rep) {
            IntPoly f = random_poly_with_valuations(rng, p, 10, true);
            NewtonPolygon np = newton_polygon(f, p);
            // independent count: gcd-1 interior points per segment plus the
            // interior vertices where segments meet
            std::size_t interior = 0;
            const auto& vs = np.vertices();
            for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
                long di = static_cast<long>(vs[i + 1].index - vs[i].index);
                long dv = static_cast<long>(vs[i + 1].val) - static_cast<long>(vs[i].val);
                interior += std::gcd(di, dv < 0 ? -dv : dv) - 1;
            }
            if (vs.size() == 1) {
                CHECK(factor_bound(np) == 0);
            } else {
                interior += vs.size() - 2; // vertices between segments
                CHECK(factor_bound(np) == 1 + interior);
            }
        }
    }
}

TEST_CASE("power coefficient bound examples") {
    // f = 2 + 2x, k = 2, i = 1, p = 2: bound 3 and the coefficient attains it
    IntPoly f(Variable::x, {2, 2});
    CHECK(power_coeff_bound(f, 2, 1, 2) == Valuation::finite(3));
    CHECK(int_valuation(pow(f, 2).coeff(1), 2) == Valuation::finite(3));
    // k = 1 reduces to the coefficient valuation
    IntPoly g(Variable::x, {12, 3, 18});
    for (std::size_t i = 0; i <= 2; ++i) {
        CHECK(power_coeff_bound(g, 1, i, 3) == int_valuation(g.coeff(i), 3));
    }
    CHECK_THROWS_AS(power_coeff_bound(f, 2, 5, 2), IndexOutOfRange);
    CHECK_THROWS_AS(power_coeff_bound(f, 0, 0, 2), std::invalid_argument);
}

TEST_CASE("power bound is sound on random inputs") {
    std::mt19937_64 rng(12);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (int rep = 0; rep < 25; ++rep) {
            IntPoly f = random_poly_with_valuations(rng, p, 5, false);
            unsigned long k = 2 + rng() % 4;
            IntPoly fk = pow(f, k);
            for (std::size_t i = 0; i <= fk.degree(); ++i) {
                CHECK(int_valuation(fk.coeff(i), p) >= power_coeff_bound(f, k, i, p));
            }
        }
    }
}

TEST_CASE("power valuation pattern for (b+1)^d + (d-1) at p = d") {
    for (unsigned d : {2u, 3u, 5u, 7u}) {
        IntPoly f = pow(IntPoly(Variable::b, {1, 1}), d) +
                    IntPoly::constant(Variable::b, BigInt(static_cast<long>(d) - 1));
        IntPoly fd = pow(f, d);
        CHECK(int_valuation(fd.coeff(0), d) == Valuation::finite(d));
        CHECK(int_valuation(fd.coeff(static_cast<std::size_t>(d) * d), d) ==
              Valuation::finite(0));
        for (std::size_t i = 1; i < static_cast<std::size_t>(d) * d; ++i) {
            Valuation v = int_valuation(fd.coeff(i), d);
            CHECK(v >= Valuation::finite(d + 1 - i / d));
        }
        // the multinomial bound agrees with the pattern at a middle index
        CHECK(power_coeff_bound(f, d, d + 1, d) >= Valuation::finite(d));
    }
}

TEST_CASE("line domination") {
    IntPoly bd_g2 = outer_divisor(3, Variable::b) * misiurewicz(FamilyParams{3, 2, 1}, Variable::b)
                                                        .misiurewicz;
    Line ell{Rational(1), Rational(9), Rational(6), Rational(6)};
    CHECK(dominates_line(bd_g2, 3, ell, 1, 6));
    // a horizontal line below zero is always dominated
    Line low{Rational(0), Rational(-1), Rational(10), Rational(-1)};
    CHECK(dominates_line(bd_g2, 3, low, 0, 7));
    // a line far above is not
    Line high{Rational(0), Rational(1000), Rational(10), Rational(1000)};
    CHECK_FALSE(dominates_line(bd_g2, 3, high, 1, 6));
    CHECK_THROWS_AS(dominates_line(bd_g2, 3, Line{Rational(1), Rational(0), Rational(1), Rational(5)}, 0, 3),
                    std::invalid_argument);
}
