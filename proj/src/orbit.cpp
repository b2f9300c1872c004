#include "mz/orbit.hpp"

#include "mz/dynatomic.hpp"
#include "mz/errors.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>
#include <numbers>

namespace mz {

namespace {

// Coefficients rescaled by a common power of two so the largest magnitude is
// ~1; scaling does not move roots. Throws if a coefficient still overflows.
std::vector<Complex> scaled_double_coeffs(const IntPoly& f) {
    long max_exp = LONG_MIN;
    std::vector<std::pair<double, long>> parts;
    parts.reserve(f.term_count());
    for (const BigInt& c : f.coeffs()) {
        long e = 0;
        double m = c.to_double_2exp(e);
        parts.emplace_back(m, e);
        if (!c.is_zero()) max_exp = std::max(max_exp, e);
    }
    std::vector<Complex> out;
    out.reserve(parts.size());
    for (auto& [m, e] : parts) {
        double v = m == 0.0 ? 0.0 : std::ldexp(m, static_cast<int>(e - max_exp));
        if (!std::isfinite(v)) throw NoConvergence("coefficient overflows double range");
        out.emplace_back(v, 0.0);
    }
    return out;
}

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
    return acc;
}

} // namespace

std::vector<Complex> complex_roots(const IntPoly& f, double tol, int maxiter) {
    if (f.is_zero() || f.degree() < 1) {
        throw std::invalid_argument("complex_roots: degree must be >= 1");
    }
    std::vector<Complex> c = scaled_double_coeffs(f);
    const std::size_t n = c.size() - 1;
    for (auto& v : c) v /= c.back(); // monic

    double radius = 0;
    for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
    radius = 1.0 + radius;

    // deterministic start points on a perturbed circle
    std::vector<Complex> z(n);
    const double offset = std::numbers::sqrt2; // irrational angle, avoids symmetry locks
    for (std::size_t k = 0; k < n; ++k) {
        double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) +
                       offset;
        z[k] = std::polar(radius, theta);
    }

    for (int iter = 0; iter < maxiter; ++iter) {
        double max_step = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex denom(1.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) denom *= (z[i] - z[j]);
            }
            if (denom == Complex(0.0, 0.0)) {
                z[i] += Complex(1e-8, 1e-8); // nudge a collision apart
                continue;
            }
            Complex step = horner(c, z[i]) / denom;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 1e-14 * radius) break;
    }
    for (const Complex& r : z) {
        double scale = 1.0 + std::pow(std::abs(r), static_cast<double>(n));
        if (!(std::abs(horner(c, r)) / scale < tol)) {
            throw NoConvergence("complex_roots: residual above tolerance after iteration cap");
        }
    }
    std::sort(z.begin(), z.end(), [](const Complex& l, const Complex& r) {
        if (l.real() != r.real()) return l.real() < r.real();
        return l.imag() < r.imag();
    });
    return z;
}

Complex phi_apply(Complex a, Complex z, unsigned d, double pole_tol) {
    Complex zd(1.0, 0.0);
    for (unsigned i = 0; i < d; ++i) zd *= z;
    Complex denom = zd + Complex(static_cast<double>(d) - 1.0, 0.0);
    if (std::abs(denom) <= pole_tol * std::max(1.0, std::abs(zd))) {
        throw PoleEncountered("phi_apply: orbit hit a pole");
    }
    return a * z / denom;
}

Rational phi_apply(const Rational& a, const Rational& z, unsigned d) {
    Rational zd(1);
    for (unsigned i = 0; i < d; ++i) zd = zd * z;
    Rational denom = zd + Rational(static_cast<long>(d) - 1);
    if (denom.is_zero()) throw PoleEncountered("phi_apply: exact pole");
    return a * z / denom;
}

std::vector<Complex> fixed_points(Complex a, unsigned d) {
    std::vector<Complex> out{Complex(0.0, 0.0)};
    Complex w = a - Complex(static_cast<double>(d) - 1.0, 0.0);
    double r = std::pow(std::abs(w), 1.0 / static_cast<double>(d));
    double theta = std::arg(w);
    for (unsigned k = 0; k < d; ++k) {
        double angle = (theta + 2.0 * std::numbers::pi * k) / static_cast<double>(d);
        out.push_back(std::polar(r, angle));
    }
    return out;
}

OrbitReport orbit_portrait_check(unsigned d, unsigned m, Complex a, double tol,
                                 RootSource source) {
    OrbitReport rep;
    rep.parameter = a;

    // residual against the claimed source polynomial
    if (m >= 1) {
        FamilyParams params{d, m, 1};
        MisiurewiczBundle bundle = misiurewicz(params, Variable::a);
        const IntPoly& src =
            source == RootSource::Misiurewicz ? bundle.misiurewicz : bundle.q_factor;
        if (!src.is_zero() && src.degree() >= 1) {
            std::vector<Complex> c = scaled_double_coeffs(src);
            for (auto& v : c) v /= c.back();
            rep.root_residual = std::abs(horner(c, a)) /
                                (1.0 + std::pow(std::abs(a), static_cast<double>(c.size() - 1)));
        }
    }

    // Iterate in homogeneous coordinates: roots of the q-factor send the
    // critical orbit through the point at infinity before it lands on 0, so
    // the affine form would hit a pole mid-orbit.
    std::vector<std::pair<Complex, Complex>> proj; // (x_t, y_t), renormalized
    proj.emplace_back(Complex(1.0, 0.0), Complex(1.0, 0.0));
    for (unsigned t = 0; t <= m; ++t) {
        auto [x, y] = proj.back();
        Complex yd(1.0, 0.0), xd(1.0, 0.0);
        for (unsigned i = 0; i + 1 < d; ++i) yd *= y;
        for (unsigned i = 0; i < d; ++i) xd *= x;
        Complex xn = a * x * yd;
        Complex yn = xd + Complex(static_cast<double>(d) - 1.0, 0.0) * (yd * y);
        double scale = std::max(std::abs(xn), std::abs(yn));
        if (scale == 0.0 || !std::isfinite(scale)) {
            throw PoleEncountered("orbit_portrait_check: degenerate projective iterate");
        }
        proj.emplace_back(xn / scale, yn / scale);
    }
    for (const auto& [x, y] : proj) {
        // affine value; infinity is recorded as an infinite component
        rep.orbit.push_back(std::abs(y) > 1e-14 * std::abs(x)
                                ? x / y
                                : Complex(std::numeric_limits<double>::infinity(), 0.0));
    }

    // spherical (chordal) distance between consecutive iterates
    auto step_gap = [&](unsigned t) {
        const auto& [xp, yp] = proj[t];
        const auto& [xq, yq] = proj[t + 1];
        return std::abs(xp * yq - xq * yp) /
               (std::sqrt(std::norm(xp) + std::norm(yp)) *
                std::sqrt(std::norm(xq) + std::norm(yq)));
    };
    int tail = -1;
    for (unsigned t = 0; t <= m; ++t) {
        if (step_gap(t) <= tol) {
            tail = static_cast<int>(t);
            break;
        }
    }
    rep.tail = tail;

    if (tail < 0) {
        rep.status = OrbitStatus::Fail;
        rep.note = "iterate " + std::to_string(m) + " is not fixed";
        return rep;
    }
    if (static_cast<unsigned>(tail) < m) {
        rep.status = OrbitStatus::Fail;
        rep.note = "tail " + std::to_string(tail) + " shorter than " + std::to_string(m);
        return rep;
    }
    // tail == m; demand clear separation at the previous step
    if (m > 0 && step_gap(m - 1) <= 10.0 * tol) {
        rep.status = OrbitStatus::Indeterminate;
        rep.note = "separation margin too small at step " + std::to_string(m - 1);
        return rep;
    }

    const Complex zm = rep.orbit[m];
    if (!std::isfinite(zm.real()) || !std::isfinite(zm.imag())) {
        throw NoFixedPointMatch("orbit_portrait_check: m-th iterate is at infinity");
    }
    Complex best{};
    double best_dist = std::numeric_limits<double>::infinity();
    for (const Complex& w : fixed_points(a, d)) {
        double dist = std::abs(zm - w);
        if (dist < best_dist) {
            best_dist = dist;
            best = w;
        }
    }
    if (!(best_dist <= tol * std::max(1.0, std::abs(zm)))) {
        throw NoFixedPointMatch("orbit_portrait_check: landing point matches no fixed point");
    }
    rep.landing = best;
    rep.landing_is_zero = std::abs(best) <= 10.0 * tol;

    const bool want_zero = source == RootSource::QFactor;
    if (rep.landing_is_zero != want_zero) {
        rep.status = OrbitStatus::Fail;
        rep.note = want_zero ? "expected landing on 0" : "expected a nonzero fixed landing";
        return rep;
    }

    // equivariance residual at a few deterministic sample points
    const Complex zeta = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(d));
    std::uint64_t lcg = 0x2545F4914F6CDD1Dull;
    double resid = 0;
    for (int s = 0; s < 8; ++s) {
        lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
        double re = 0.3 + 1.4 * static_cast<double>(lcg >> 40) / 16777216.0;
        lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
        double im = 0.3 + 1.4 * static_cast<double>(lcg >> 40) / 16777216.0;
        Complex zs(re, im);
        try {
            Complex lhs = phi_apply(a, zeta * zs, d);
            Complex rhs = zeta * phi_apply(a, zs, d);
            resid = std::max(resid, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        } catch (const PoleEncountered&) {
            continue; // sampled too close to a pole; skip the point
        }
    }
    rep.equivariance_residual = resid;
    if (!(resid < tol)) {
        rep.status = OrbitStatus::Fail;
        rep.note = "equivariance residual above tolerance";
        return rep;
    }

    rep.status = OrbitStatus::Pass;
    return rep;
}

const char* to_string(OrbitStatus s) {
    switch (s) {
        case OrbitStatus::Pass: return "PASS";
        case OrbitStatus::Fail: return "FAIL";
        case OrbitStatus::Indeterminate: return "Indeterminate";
    }
    return "?";
}

} // namespace mz
