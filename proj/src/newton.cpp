#include "mz/newton.hpp"

#include "mz/errors.hpp"
#include "mz/numbers.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mz {

namespace {

// Cross product (B-A) x (C-A) on BigInt; positive means A->B->C turns left.
BigInt cross(const PolygonPoint& a, const PolygonPoint& b, const PolygonPoint& c) {
    BigInt abx = BigInt(static_cast<long>(b.index)) - BigInt(static_cast<long>(a.index));
    BigInt aby = BigInt(static_cast<long>(b.val)) - BigInt(static_cast<long>(a.val));
    BigInt acx = BigInt(static_cast<long>(c.index)) - BigInt(static_cast<long>(a.index));
    BigInt acy = BigInt(static_cast<long>(c.val)) - BigInt(static_cast<long>(a.val));
    return abx * acy - aby * acx;
}

std::uint64_t u_gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

struct RawSegment {
    long di; // horizontal length, > 0
    long dv; // signed rise
};

std::vector<RawSegment> raw_segments(const NewtonPolygon& np) {
    std::vector<RawSegment> out;
    const auto& vs = np.vertices();
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        out.push_back({static_cast<long>(vs[i + 1].index - vs[i].index),
                       static_cast<long>(vs[i + 1].val) - static_cast<long>(vs[i].val)});
    }
    return out;
}

void require_nonzero_constant(const NewtonPolygon& np, const char* op) {
    if (np.zero_prefix() != 0) {
        throw NonzeroConstantRequired(std::string(op) + ": requires a nonzero constant term");
    }
}

} // namespace

std::uint64_t Segment::denom() const {
    return static_cast<std::uint64_t>(slope.den().to_long());
}

std::vector<Valuation> coefficient_valuations(const IntPoly& f, std::uint64_t p) {
    std::vector<Valuation> out;
    out.reserve(f.term_count());
    for (const BigInt& c : f.coeffs()) out.push_back(int_valuation(c, p));
    return out;
}

NewtonPolygon newton_polygon(const IntPoly& f, std::uint64_t p) {
    if (f.is_zero()) throw ZeroPolynomial("newton_polygon: zero polynomial");
    std::vector<Valuation> vals = coefficient_valuations(f, p);
    const std::size_t zero_prefix = f.trailing_zeros();

    std::vector<PolygonPoint> pts;
    for (std::size_t i = zero_prefix; i < vals.size(); ++i) {
        if (!vals[i].is_infinite()) pts.push_back({i, vals[i].value()});
    }
    // Monotone chain, lower hull only; collinear middle points are dropped so
    // vertices are exactly the slope changes plus the two endpoints.
    std::vector<PolygonPoint> hull;
    for (const PolygonPoint& pt : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt).sign() <= 0) {
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    return NewtonPolygon(p, zero_prefix, std::move(hull));
}

std::vector<Segment> segments(const NewtonPolygon& np) {
    std::vector<Segment> out;
    for (const RawSegment& rs : raw_segments(np)) {
        out.push_back(Segment{Rational(BigInt(rs.dv), BigInt(rs.di)), static_cast<std::uint64_t>(rs.di)});
    }
    return out;
}

std::size_t lattice_point_count(const NewtonPolygon& np) {
    require_nonzero_constant(np, "lattice_point_count");
    std::size_t count = 1; // first vertex
    for (const RawSegment& rs : raw_segments(np)) {
        count += u_gcd(static_cast<std::uint64_t>(rs.di),
                       static_cast<std::uint64_t>(rs.dv < 0 ? -rs.dv : rs.dv));
    }
    return count;
}

std::size_t factor_bound(const NewtonPolygon& np) { return lattice_point_count(np) - 1; }

bool is_eisenstein(const NewtonPolygon& np) {
    require_nonzero_constant(np, "is_eisenstein");
    auto raw = raw_segments(np);
    if (raw.size() != 1) return false;
    return u_gcd(static_cast<std::uint64_t>(raw[0].di),
                 static_cast<std::uint64_t>(raw[0].dv < 0 ? -raw[0].dv : raw[0].dv)) == 1;
}

NewtonPolygon concat(const std::vector<NewtonPolygon>& polys) {
    if (polys.empty()) throw std::invalid_argument("concat: empty polygon list");
    const std::uint64_t p = polys.front().prime();
    std::size_t zero_prefix = 0;
    std::uint64_t start_val = 0;
    std::vector<RawSegment> all;
    for (const NewtonPolygon& np : polys) {
        if (np.prime() != p) throw PrimeMismatch("concat: polygons over different primes");
        zero_prefix += np.zero_prefix();
        start_val += np.vertices().front().val;
        auto raw = raw_segments(np);
        all.insert(all.end(), raw.begin(), raw.end());
    }
    // Sort by slope (exact cross comparison) and merge equal slopes so that
    // vertices remain exactly the slope-change points.
    std::sort(all.begin(), all.end(), [](const RawSegment& l, const RawSegment& r) {
        return static_cast<__int128>(l.dv) * r.di < static_cast<__int128>(r.dv) * l.di;
    });
    std::vector<RawSegment> merged;
    for (const RawSegment& rs : all) {
        if (!merged.empty() &&
            static_cast<__int128>(merged.back().dv) * rs.di ==
                static_cast<__int128>(rs.dv) * merged.back().di) {
            merged.back().di += rs.di;
            merged.back().dv += rs.dv;
        } else {
            merged.push_back(rs);
        }
    }
    std::vector<PolygonPoint> vertices;
    PolygonPoint cur{zero_prefix, start_val};
    vertices.push_back(cur);
    for (const RawSegment& rs : merged) {
        cur.index += static_cast<std::size_t>(rs.di);
        cur.val = static_cast<std::uint64_t>(static_cast<long>(cur.val) + rs.dv);
        vertices.push_back(cur);
    }
    return NewtonPolygon(p, zero_prefix, std::move(vertices));
}

std::set<std::size_t> factor_degree_candidates(const NewtonPolygon& np) {
    require_nonzero_constant(np, "factor_degree_candidates");
    const std::size_t deg = np.vertices().back().index;
    std::vector<char> reachable(deg + 1, 0);
    reachable[0] = 1;
    for (const RawSegment& rs : raw_segments(np)) {
        const std::uint64_t hlen = static_cast<std::uint64_t>(rs.di);
        // slope denominator in lowest terms: hlen / gcd(hlen, |rise|)
        const std::uint64_t l =
            hlen / u_gcd(hlen, static_cast<std::uint64_t>(rs.dv < 0 ? -rs.dv : rs.dv));
        std::vector<char> next = reachable;
        for (std::uint64_t c = l; c <= hlen; c += l) {
            for (std::size_t s = 0; s + c <= deg; ++s) {
                if (reachable[s]) next[s + c] = 1;
            }
        }
        reachable = std::move(next);
    }
    std::set<std::size_t> out;
    for (std::size_t dgr = 1; dgr < deg; ++dgr) {
        if (reachable[dgr]) out.insert(dgr);
    }
    return out;
}

namespace {

// Enumerates nondecreasing k-tuples with entries in [0, maxpart] summing to
// target, grouped as (value, multiplicity) runs in counts.
void enumerate_partitions(unsigned long slots, std::size_t target, std::size_t maxpart,
                          std::size_t minpart, std::vector<std::pair<std::size_t, unsigned>>& counts,
                          const std::function<void()>& visit) {
    if (slots == 0) {
        if (target == 0) visit();
        return;
    }
    if (target > maxpart * slots) return;
    for (std::size_t v = minpart; v <= maxpart; ++v) {
        if (v > target) break;
        for (unsigned long mult = 1; mult <= slots && v * mult <= target; ++mult) {
            counts.emplace_back(v, static_cast<unsigned>(mult));
            enumerate_partitions(slots - mult, target - v * mult, maxpart, v + 1, counts, visit);
            counts.pop_back();
        }
    }
}

} // namespace

Valuation power_coeff_bound(const IntPoly& f, unsigned long k, std::size_t i, std::uint64_t p) {
    if (f.is_zero()) throw ZeroPolynomial("power_coeff_bound: zero polynomial");
    if (k < 1) throw std::invalid_argument("power_coeff_bound: k must be >= 1");
    const std::size_t n = f.degree();
    if (i > k * n) throw IndexOutOfRange("power_coeff_bound: index beyond degree of f^k");
    if (!is_prime(p)) throw NotPrime("power_coeff_bound: p is not prime");

    std::vector<Valuation> vals = coefficient_valuations(f, p);
    const std::uint64_t kfact_val = factorial_valuation(k, p);

    Valuation best = Valuation::infinity();
    std::vector<std::pair<std::size_t, unsigned>> counts;
    enumerate_partitions(k, i, n, 0, counts, [&] {
        // ord_p(k! / prod mult!) + sum of coefficient valuations
        std::uint64_t multinomial_val = kfact_val;
        Valuation total = Valuation::finite(0);
        for (const auto& [value, mult] : counts) {
            multinomial_val -= factorial_valuation(mult, p);
            for (unsigned t = 0; t < mult; ++t) total = total + vals[value];
        }
        if (total.is_infinite()) return; // a zero coefficient kills this tuple
        best = min(best, Valuation::finite(multinomial_val) + total);
    });
    return best;
}

bool dominates_line(const IntPoly& f, std::uint64_t p, const Line& line, std::size_t lo,
                    std::size_t hi) {
    if (line.x1 == line.x2) throw std::invalid_argument("dominates_line: vertical line");
    std::vector<Valuation> vals = coefficient_valuations(f, p);
    // (v - y1)(x2 - x1) >= (y2 - y1)(i - x1), after orienting x1 < x2.
    Rational x1 = line.x1, y1 = line.y1, x2 = line.x2, y2 = line.y2;
    if (x2 < x1) {
        std::swap(x1, x2);
        std::swap(y1, y2);
    }
    for (std::size_t i = lo; i <= hi; ++i) {
        Valuation v = i < vals.size() ? vals[i] : Valuation::infinity();
        if (v.is_infinite()) continue;
        Rational lhs = (Rational(BigInt(static_cast<unsigned long>(v.value()))) - y1) * (x2 - x1);
        Rational rhs = (y2 - y1) * (Rational(BigInt(static_cast<unsigned long>(i))) - x1);
        if (lhs < rhs) return false;
    }
    return true;
}

} // namespace mz
