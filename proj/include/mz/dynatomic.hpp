#pragma once

/**
 * @file dynatomic.hpp
 * @brief Orbit polynomial tables and Misiurewicz polynomials for the family
 *        of degree-d rational maps z -> az/(z^d + (d-1)).
 *
 * Two coordinates are supported. In the parameter a the numerator/denominator
 * pair (p_n, q_n) of the n-th iterate at the critical point obeys
 *     p_0 = q_0 = 1,  p_{n+1} = a p_n q_n^{d-1},  q_{n+1} = p_n^d + (d-1) q_n^d,
 * and in the shifted parameter b (a = (b+1)d) the pair (r_n, s_n) obeys the
 * same recursion with multiplier (b+1)d. Everything downstream is exact
 * integer polynomial arithmetic; any division failure signals a construction
 * bug and is allowed to escape as NonExactDivision.
 */

#include "mz/poly.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace mz {

struct FamilyParams {
    unsigned d = 3; // map degree, >= 2
    unsigned m = 1; // tail length, >= 0
    unsigned n = 1; // formal period, >= 1
};

void validate(const FamilyParams& params); // throws std::invalid_argument

class OrbitTable {
public:
    OrbitTable(unsigned d, Variable var) : d_(d), var_(var) {}

    unsigned d() const { return d_; }
    Variable variable() const { return var_; }
    std::size_t size() const { return entries_.size(); }

    /// (p_n, q_n) resp. (r_n, s_n).
    const IntPoly& num(std::size_t n) const { return entries_.at(n).first; }
    const IntPoly& den(std::size_t n) const { return entries_.at(n).second; }

    void extend_to(std::size_t n);

private:
    unsigned d_;
    Variable var_;
    std::vector<std::pair<IntPoly, IntPoly>> entries_;
};

/// Fresh table with entries 0..N.
OrbitTable orbit_table(unsigned d, std::size_t N, Variable var);

/// Shared table from the process-wide cache, grown to at least N. The cache
/// is mutex-guarded; returned tables are immutable snapshots.
std::shared_ptr<const OrbitTable> orbit_table_cached(unsigned d, std::size_t N, Variable var);

/// Product over divisors k of params.n of (q_k - p_k)^(mu(n/k)), i.e. the
/// n-th dynatomic polynomial evaluated at (1,1). Table must reach index n.
IntPoly dynatomic_eval(const FamilyParams& params, const OrbitTable& table);

/// Tail-m, period-n parameter polynomial before removing the known factors;
/// for m = 0 this is dynatomic_eval. Table must reach index m + n.
IntPoly pre_misiurewicz(const FamilyParams& params, const OrbitTable& table);

struct MisiurewiczBundle {
    FamilyParams params;
    Variable variable;
    IntPoly pre_misiurewicz; // tail-m factorable form
    IntPoly misiurewicz;     // the tail-m Misiurewicz polynomial
    IntPoly q_factor;        // q_{m-1} resp. s_{m-1}
    IntPoly sigma;           // multiplier * q_{m-1}^d
    IntPoly tau;             // q_m - sigma
    std::optional<IntPoly> F; // s_{m-1}^d, variable b and m >= 2 only
};

enum class InnerQuotientRoute { GeometricSum, LongDivision };

/// Builds the full bundle for tail length m >= 1 (n = 1). Both routes for the
/// inner quotient give the same polynomial; the geometric sum avoids the long
/// division pass and is the default.
MisiurewiczBundle misiurewicz(const FamilyParams& params, Variable var,
                              InnerQuotientRoute route = InnerQuotientRoute::GeometricSum);

struct SigmaTau {
    IntPoly sigma;
    IntPoly tau;
    std::optional<IntPoly> F; // present for m >= 2
};

/// sigma = (b+1) d s_{m-1}^d and tau = s_m - sigma in variable b; m >= 1.
SigmaTau sigma_tau(const FamilyParams& params);

/// Verifies the expanded binomial identity for D*G_m, where D is (a-d) resp.
/// b*d. Exact polynomial equality; m >= 1.
bool expansion_check(const FamilyParams& params, Variable var = Variable::b);

/// The parameter-multiplier polynomial: a, resp. (b+1)d.
IntPoly map_multiplier(unsigned d, Variable var);

/// The removed linear factor: (a - d), resp. b*d.
IntPoly outer_divisor(unsigned d, Variable var);

/// The fixed-point unit: (a - d + 1), resp. (bd + 1).
IntPoly fixed_point_unit(unsigned d, Variable var);

} // namespace mz
