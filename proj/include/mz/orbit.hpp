#pragma once

/**
 * @file orbit.hpp
 * @brief Numeric validation of the dynamical meaning of Misiurewicz roots:
 *        iterate the critical point 1 under z -> az/(z^d + (d-1)) and check
 *        the tail length, the landing fixed point, and equivariance under
 *        the order-d rotation.
 */

#include "mz/poly.hpp"
#include "mz/rational.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace mz {

using Complex = std::complex<double>;

/// All roots by Durand-Kerner iteration from a perturbed circle; each root
/// satisfies |f(z)| / (1 + |z|^deg) < tol for the monic-normalized f.
/// Deterministic start points. Throws NoConvergence after maxiter sweeps.
std::vector<Complex> complex_roots(const IntPoly& f, double tol = 1e-10, int maxiter = 2000);

/// One application of the map; throws PoleEncountered when the denominator
/// magnitude falls below pole_tol. Very large z map smoothly toward 0.
Complex phi_apply(Complex a, Complex z, unsigned d, double pole_tol = 1e-12);

/// Exact rational form; throws PoleEncountered on a zero denominator.
Rational phi_apply(const Rational& a, const Rational& z, unsigned d);

/// The d+1 finite fixed points: 0 and the d complex d-th roots of a-d+1.
std::vector<Complex> fixed_points(Complex a, unsigned d);

enum class OrbitStatus { Pass, Fail, Indeterminate };
enum class RootSource { Misiurewicz, QFactor };

struct OrbitReport {
    Complex parameter{};
    double root_residual = 0;
    std::vector<Complex> orbit; // iterates of the critical point 1
    int tail = -1;              // smallest t with phi^(t+1)(1) ~ phi^t(1)
    std::optional<Complex> landing;
    bool landing_is_zero = false;
    double equivariance_residual = 0;
    OrbitStatus status = OrbitStatus::Fail;
    std::string note;
};

/// Validates one parameter value: tail exactly m, the m-th iterate lands on a
/// fixed point, and the landing class matches the source polynomial (roots of
/// q_{m-1} land on 0, roots of the Misiurewicz polynomial on a nonzero fixed
/// point). Parameters too close to degenerate separation are Indeterminate.
OrbitReport orbit_portrait_check(unsigned d, unsigned m, Complex a, double tol,
                                 RootSource source);

const char* to_string(OrbitStatus s);

} // namespace mz
