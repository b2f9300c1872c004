#pragma once

/**
 * @file newton.hpp
 * @brief p-adic Newton polygons: lower convex hull of (i, ord_p(c_i)),
 *        segment decomposition, lattice counts, the product/concatenation
 *        law, factor-degree candidates, and the power-coefficient bound.
 *
 * A polynomial divisible by the variable has its zero prefix stripped and
 * recorded; the hull is built on the remaining finite points, with vertex
 * indices kept in the original coordinates. Operations stated only for a
 * nonzero constant term (lattice counts, Eisenstein, candidates) require
 * zero_prefix == 0 and throw NonzeroConstantRequired otherwise.
 */

#include "mz/poly.hpp"
#include "mz/rational.hpp"
#include "mz/valuation.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace mz {

struct PolygonPoint {
    std::size_t index;
    std::uint64_t val;
    friend bool operator==(const PolygonPoint& a, const PolygonPoint& b) {
        return a.index == b.index && a.val == b.val;
    }
};

struct Segment {
    Rational slope;      // exact, lowest terms
    std::uint64_t hlen;  // horizontal length, >= 1
    std::uint64_t denom() const; // denominator of slope in lowest terms
};

struct Line {
    Rational x1, y1, x2, y2; // two distinct anchors, x1 != x2
};

class NewtonPolygon {
public:
    NewtonPolygon(std::uint64_t prime, std::size_t zero_prefix, std::vector<PolygonPoint> vertices)
        : prime_(prime), zero_prefix_(zero_prefix), vertices_(std::move(vertices)) {}

    std::uint64_t prime() const { return prime_; }
    std::size_t zero_prefix() const { return zero_prefix_; }
    const std::vector<PolygonPoint>& vertices() const { return vertices_; }

    friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) {
        return a.prime_ == b.prime_ && a.zero_prefix_ == b.zero_prefix_ &&
               a.vertices_ == b.vertices_;
    }
    friend bool operator!=(const NewtonPolygon& a, const NewtonPolygon& b) { return !(a == b); }

private:
    std::uint64_t prime_;
    std::size_t zero_prefix_;
    std::vector<PolygonPoint> vertices_;
};

/// Valuations of all coefficients of f at p (INFINITY at zero coefficients).
std::vector<Valuation> coefficient_valuations(const IntPoly& f, std::uint64_t p);

/// Lower convex hull; throws ZeroPolynomial on the zero polynomial, NotPrime
/// on composite p.
NewtonPolygon newton_polygon(const IntPoly& f, std::uint64_t p);

/// Segments between consecutive vertices, slopes strictly increasing; empty
/// for a single-vertex polygon.
std::vector<Segment> segments(const NewtonPolygon& np);

/// Number of integer points lying exactly on the hull. Requires zero_prefix 0.
std::size_t lattice_point_count(const NewtonPolygon& np);

/// lattice_point_count - 1: an upper bound on the number of factors over Q.
std::size_t factor_bound(const NewtonPolygon& np);

/// One segment, no interior lattice point: certifies irreducibility over Q.
bool is_eisenstein(const NewtonPolygon& np);

/// Rearranged concatenation: all segments sorted by slope, anchored at the
/// componentwise sum of the starting points. Zero prefixes add.
NewtonPolygon concat(const std::vector<NewtonPolygon>& polys);

/// Degrees 0 < D < deg realizable by a subfactor polygon: each segment of
/// slope denominator l and horizontal length L contributes a multiple of l
/// up to L. Requires zero_prefix 0.
std::set<std::size_t> factor_degree_candidates(const NewtonPolygon& np);

/// Lower bound on ord_p of the i-th coefficient of f^k from the multinomial
/// expansion: min over nondecreasing k-tuples summing to i of
/// ord_p(multinomial) + sum of coefficient valuations.
Valuation power_coeff_bound(const IntPoly& f, unsigned long k, std::size_t i, std::uint64_t p);

/// True iff (i, ord_p(c_i(f))) lies on or above the line for every i in
/// [lo, hi]; INFINITY is trivially above.
bool dominates_line(const IntPoly& f, std::uint64_t p, const Line& line, std::size_t lo,
                    std::size_t hi);

} // namespace mz
