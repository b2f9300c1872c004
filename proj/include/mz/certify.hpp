#pragma once

/**
 * @file certify.hpp
 * @brief Irreducibility certificates over Q: Eisenstein polygons, polygon
 *        factor bounds plus rational-root exclusion, and a finite-field
 *        irreducibility fallback. Certificates carry enough audit data to be
 *        replayed without re-running any search.
 */

#include "mz/deadline.hpp"
#include "mz/newton.hpp"
#include "mz/poly.hpp"
#include "mz/rational.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mz {

/// Dense polynomial over the p-element field, residues ascending, leading
/// residue nonzero.
class ModPoly {
public:
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    std::uint64_t prime() const { return p_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const; // throws ZeroPolynomial

    friend bool operator==(const ModPoly& f, const ModPoly& g) {
        return f.p_ == g.p_ && f.c_ == g.c_;
    }

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

/// Coefficientwise reduction; requires p prime and p not dividing the leading
/// coefficient (LeadingCoefficientVanishes otherwise).
ModPoly modp_reduce(const IntPoly& f, std::uint64_t p);

/// Rabin irreducibility test over F_p: x^(p^n) = x mod g and
/// gcd(x^(p^(n/q)) - x, g) = 1 for every prime q | n. deg g >= 1.
bool modp_irreducible(const ModPoly& g);

enum class Verdict { Irreducible, Reducible, Inconclusive };
enum class Method {
    TrivialDegree,
    EisensteinPolygon,
    PolygonPlusRootExclusion,
    ModP,
    RationalRootFound
};

struct RootCandidate {
    enum class Source { RationalRootTheorem, FamilyLinearForm };
    Rational value;
    Source source = Source::RationalRootTheorem;
};

struct RootExclusion {
    bool complete = false; // candidate enumeration was exhaustive
    std::optional<Rational> root_found;
    std::vector<RootCandidate> excluded;
    std::uint64_t trial_bound = 0;
};

/// Evaluates f exactly at every rational-root-theorem candidate of its
/// primitive part plus the supplied extra candidates. If the constant or
/// leading coefficient cannot be fully factored by trial division up to
/// trial_bound (or the divisor count exceeds the cap), the result is marked
/// incomplete and proves nothing.
RootExclusion rational_root_exclusion(const IntPoly& f,
                                      const std::vector<RootCandidate>& extra = {},
                                      std::uint64_t trial_bound = 10000,
                                      std::size_t candidate_cap = 200000);

struct PolygonAttempt {
    std::uint64_t prime;
    Variable variable;
    NewtonPolygon polygon;
    std::set<std::size_t> candidates;
    bool eisenstein;
};

struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Method> method;
    std::optional<std::uint64_t> prime;
    Variable variable = Variable::x; // coordinate of the certified polynomial
    std::optional<std::size_t> degree; // degree of the certified primitive part
    BigInt content = BigInt(1);
    std::optional<NewtonPolygon> polygon;   // the certifying polygon
    std::vector<RootCandidate> excluded_roots;
    std::optional<Rational> rational_root;  // witness for Reducible
    std::vector<PolygonAttempt> polygon_attempts; // audit: every polygon tried
    std::vector<std::uint64_t> primes_tried;      // audit: mod-p stage
    std::string note;
};

struct CertifyConfig {
    std::vector<std::uint64_t> polygon_primes; // empty: primes <= 50 dividing the constant
    unsigned modp_budget = 25;
    std::uint64_t trial_bound = 10000;
    std::vector<RootCandidate> extra_candidates;
    Deadline deadline;
};

/// The certification pipeline on a single polynomial: trivial degree,
/// Eisenstein polygon per prime, polygon candidates {1, deg-1} plus rational
/// root exclusion, mod-p fallback, else Reducible (root witness) or
/// Inconclusive with the attempt log.
Certificate certify_irreducible(const IntPoly& f, const CertifyConfig& config = {});

/// Family-level certification of the tail-m Misiurewicz polynomial: polygon
/// stages on the b-coordinate form, then on the a-coordinate form, then the
/// mod-p stage; first conclusive answer wins. Linear coordinate changes
/// preserve irreducibility.
Certificate certify_family(unsigned d, unsigned m, const CertifyConfig& config = {});

/// Re-checks an Irreducible or Reducible certificate from its audit data
/// alone (no search). Inconclusive certificates replay as false.
bool replay(const IntPoly& f, const Certificate& cert);

const char* to_string(Verdict v);
const char* to_string(Method m);

} // namespace mz
