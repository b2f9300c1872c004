#include "mz/certify.hpp"

#include "mz/dynatomic.hpp"
#include "mz/errors.hpp"
#include "mz/numbers.hpp"

#include <algorithm>

namespace mz {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod_u64(a, p - 2, p); }

using Residues = std::vector<std::uint64_t>;

void trim(Residues& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

Residues mul(const Residues& f, const Residues& g, std::uint64_t p) {
    if (f.empty() || g.empty()) return {};
    Residues out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            out[i + j] = (out[i + j] + static_cast<unsigned __int128>(f[i]) * g[j]) % p;
        }
    }
    trim(out);
    return out;
}

// Remainder of f by monic g.
Residues mod(Residues f, const Residues& g, std::uint64_t p) {
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        std::uint64_t lead = f.back();
        std::size_t shift = f.size() - 1 - dg;
        if (lead != 0) {
            for (std::size_t j = 0; j < dg; ++j) {
                std::uint64_t t = mulmod(lead, g[j], p);
                std::uint64_t& slot = f[shift + j];
                slot = (slot + p - t) % p;
            }
        }
        f.pop_back();
    }
    trim(f);
    return f;
}

Residues mulmod_poly(const Residues& f, const Residues& g, const Residues& m, std::uint64_t p) {
    return mod(mul(f, g, p), m, p);
}

Residues powmod_poly(Residues base, std::uint64_t e, const Residues& m, std::uint64_t p) {
    Residues acc{1 % p};
    trim(acc);
    while (e) {
        if (e & 1) acc = mulmod_poly(acc, base, m, p);
        base = mulmod_poly(base, base, m, p);
        e >>= 1;
    }
    return acc;
}

Residues gcd_poly(Residues f, Residues g, std::uint64_t p) {
    while (!g.empty()) {
        // make g monic, reduce f mod g
        std::uint64_t inv = invmod(g.back(), p);
        for (auto& c : g) c = mulmod(c, inv, p);
        f = mod(std::move(f), g, p);
        std::swap(f, g);
    }
    return f;
}

Residues sub(Residues f, const Residues& g, std::uint64_t p) {
    if (f.size() < g.size()) f.resize(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) f[i] = (f[i] + p - g[i]) % p;
    trim(f);
    return f;
}

} // namespace

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (!is_prime(p_)) throw NotPrime("ModPoly: modulus is not prime");
    for (auto& c : c_) c %= p_;
    trim(c_);
}

std::size_t ModPoly::degree() const {
    if (c_.empty()) throw ZeroPolynomial("ModPoly: degree of zero");
    return c_.size() - 1;
}

ModPoly modp_reduce(const IntPoly& f, std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime("modp_reduce: p is not prime");
    if (f.is_zero()) throw ZeroPolynomial("modp_reduce: zero polynomial");
    std::vector<std::uint64_t> out;
    out.reserve(f.term_count());
    for (const BigInt& c : f.coeffs()) out.push_back(mpz_fdiv_ui(c.raw(), p));
    if (out.back() == 0) {
        throw LeadingCoefficientVanishes("modp_reduce: p divides the leading coefficient");
    }
    return ModPoly(p, std::move(out));
}

bool modp_irreducible(const ModPoly& g) {
    const std::uint64_t p = g.prime();
    const std::size_t n = g.degree();
    if (n < 1) throw std::invalid_argument("modp_irreducible: degree must be >= 1");
    if (n == 1) return true;

    // monic modulus
    Residues m = g.coeffs();
    std::uint64_t inv = invmod(m.back(), p);
    for (auto& c : m) c = mulmod(c, inv, p);

    const Residues x{0, 1};
    // Frobenius iterates h_j = x^(p^j) mod m.
    std::vector<Residues> frob(n + 1);
    frob[0] = x;
    for (std::size_t j = 1; j <= n; ++j) {
        Deadline::check_active();
        frob[j] = powmod_poly(frob[j - 1], p, m, p);
    }
    if (frob[n] != mod(x, m, p)) return false;
    for (std::uint64_t q : prime_factors(n)) {
        Residues diff = sub(frob[n / q], x, p);
        Residues d = gcd_poly(m, std::move(diff), p);
        if (d.size() != 1) return false; // nontrivial gcd
    }
    return true;
}

RootExclusion rational_root_exclusion(const IntPoly& f, const std::vector<RootCandidate>& extra,
                                      std::uint64_t trial_bound, std::size_t candidate_cap) {
    if (f.is_zero()) throw ZeroPolynomial("rational_root_exclusion: zero polynomial");
    RootExclusion out;
    out.trial_bound = trial_bound;

    IntPoly g = primitive_part(f);
    if (g.degree() == 0) {
        out.complete = true; // nonzero constant: no roots at all
        return out;
    }
    if (g.coeff(0).is_zero()) {
        out.complete = true;
        out.root_found = Rational(0);
        return out;
    }

    Factorization c0 = trial_factor(g.coeff(0), trial_bound);
    Factorization clead = trial_factor(g.leading(), trial_bound);
    std::vector<BigInt> nums = all_divisors(c0, candidate_cap);
    std::vector<BigInt> dens = all_divisors(clead, candidate_cap);
    const bool exhaustive = c0.complete() && clead.complete() && !nums.empty() &&
                            !dens.empty() && nums.size() * dens.size() * 2 <= candidate_cap;

    std::set<std::pair<std::string, std::string>> seen;
    std::vector<RootCandidate> candidates;
    auto add = [&](Rational value, RootCandidate::Source source) {
        auto key = std::make_pair(value.num().to_decimal(), value.den().to_decimal());
        if (seen.insert(key).second) candidates.push_back({std::move(value), source});
    };
    // extras first so their source tag survives deduplication
    for (const RootCandidate& c : extra) add(c.value, c.source);
    if (exhaustive) {
        for (const BigInt& den : dens) {
            for (const BigInt& num : nums) {
                add(Rational(num, den), RootCandidate::Source::RationalRootTheorem);
                add(Rational(-num, den), RootCandidate::Source::RationalRootTheorem);
            }
        }
    }

    for (const RootCandidate& c : candidates) {
        Deadline::check_active();
        if (eval(g, c.value).is_zero()) {
            out.root_found = c.value;
            out.complete = exhaustive;
            return out;
        }
        out.excluded.push_back(c);
    }
    out.complete = exhaustive;
    return out;
}

namespace {

std::vector<std::uint64_t> default_polygon_primes(const IntPoly& primitive) {
    std::vector<std::uint64_t> primes;
    const BigInt& c0 = primitive.coeff(0);
    for (std::uint64_t p = 2; p <= 50; p = next_prime(p)) {
        if (!c0.is_zero() && c0.divisible_by(BigInt(static_cast<unsigned long>(p)))) {
            primes.push_back(p);
        }
    }
    return primes;
}

// Stages 1-3 on one polynomial form. Fills in attempts/exclusion audit and
// returns a conclusive certificate or nullopt.
std::optional<Certificate> polygon_stages(const IntPoly& f, const CertifyConfig& config,
                                          Certificate& audit,
                                          std::optional<RootExclusion>& exclusion) {
    BigInt cont;
    IntPoly g = primitive_part(f, &cont);
    audit.content = cont;
    audit.variable = f.variable();
    audit.degree = g.degree();

    auto trivial = [&] {
        Certificate cert = audit;
        cert.verdict = Verdict::Irreducible;
        cert.method = Method::TrivialDegree;
        return cert;
    };
    if (g.degree() == 0) return trivial();
    if (g.coeff(0).is_zero()) {
        if (g.degree() == 1) return trivial(); // g is a unit times the variable
        Certificate cert = audit;
        cert.verdict = Verdict::Reducible;
        cert.method = Method::RationalRootFound;
        cert.rational_root = Rational(0);
        return cert;
    }

    std::vector<std::uint64_t> primes =
        config.polygon_primes.empty() ? default_polygon_primes(g) : config.polygon_primes;

    for (std::uint64_t p : primes) {
        config.deadline.check();
        if (!is_prime(p)) throw NotPrime("certify: configured polygon prime is composite");
        NewtonPolygon np = newton_polygon(g, p);
        PolygonAttempt attempt{p, g.variable(), np, {}, false};
        attempt.eisenstein = is_eisenstein(np);
        if (attempt.eisenstein) {
            audit.polygon_attempts.push_back(attempt);
            Certificate cert = audit;
            cert.verdict = Verdict::Irreducible;
            cert.method = Method::EisensteinPolygon;
            cert.prime = p;
            cert.polygon = np;
            return cert;
        }
        attempt.candidates = factor_degree_candidates(np);
        audit.polygon_attempts.push_back(attempt);

        const std::size_t deg = g.degree();
        bool only_linear = true;
        for (std::size_t c : attempt.candidates) {
            if (c != 1 && c != deg - 1) only_linear = false;
        }
        if (only_linear && !attempt.candidates.empty()) {
            if (!exclusion) {
                exclusion = rational_root_exclusion(g, config.extra_candidates,
                                                    config.trial_bound);
            }
            if (exclusion->root_found) {
                Certificate cert = audit;
                cert.verdict = Verdict::Reducible;
                cert.method = Method::RationalRootFound;
                cert.rational_root = exclusion->root_found;
                cert.excluded_roots = exclusion->excluded;
                return cert;
            }
            if (exclusion->complete) {
                Certificate cert = audit;
                cert.verdict = Verdict::Irreducible;
                cert.method = Method::PolygonPlusRootExclusion;
                cert.prime = p;
                cert.polygon = np;
                cert.excluded_roots = exclusion->excluded;
                return cert;
            }
            audit.note = "root-candidate enumeration incomplete at trial bound " +
                         std::to_string(config.trial_bound);
        }
    }
    // a linear polynomial is irreducible even when no prime certified it
    if (g.degree() == 1) return trivial();
    return std::nullopt;
}

std::optional<Certificate> modp_stage(const IntPoly& f, const CertifyConfig& config,
                                      Certificate& audit) {
    IntPoly g = primitive_part(f);
    if (g.degree() < 1) return std::nullopt;
    unsigned tried = 0;
    std::uint64_t p = 2; // start at the first odd prime
    while (tried < config.modp_budget) {
        config.deadline.check();
        p = next_prime(p);
        if (g.leading().divisible_by(BigInt(static_cast<unsigned long>(p)))) continue;
        ++tried;
        audit.primes_tried.push_back(p);
        if (modp_irreducible(modp_reduce(g, p))) {
            Certificate cert = audit;
            cert.verdict = Verdict::Irreducible;
            cert.method = Method::ModP;
            cert.prime = p;
            cert.variable = f.variable();
            return cert;
        }
    }
    return std::nullopt;
}

Certificate settle(Certificate audit, const std::optional<RootExclusion>& exclusion) {
    if (exclusion && exclusion->root_found) {
        audit.verdict = Verdict::Reducible;
        audit.method = Method::RationalRootFound;
        audit.rational_root = exclusion->root_found;
        audit.excluded_roots = exclusion->excluded;
        return audit;
    }
    audit.verdict = Verdict::Inconclusive;
    audit.method.reset();
    return audit;
}

} // namespace

namespace {

// A rational root and an Irreducible verdict can never coexist.
void check_consistency(const Certificate& cert, const std::optional<RootExclusion>& exclusion) {
    if (cert.verdict == Verdict::Irreducible && exclusion && exclusion->root_found) {
        throw std::logic_error("certify: rational root found alongside an Irreducible verdict");
    }
}

} // namespace

Certificate certify_irreducible(const IntPoly& f, const CertifyConfig& config) {
    if (f.is_zero()) throw ZeroPolynomial("certify_irreducible: zero polynomial");
    Deadline::Scope scope(config.deadline);
    Certificate audit;
    std::optional<RootExclusion> exclusion;
    if (auto cert = polygon_stages(f, config, audit, exclusion)) {
        check_consistency(*cert, exclusion);
        return *cert;
    }
    if (auto cert = modp_stage(f, config, audit)) {
        check_consistency(*cert, exclusion);
        return *cert;
    }
    return settle(std::move(audit), exclusion);
}

Certificate certify_family(unsigned d, unsigned m, const CertifyConfig& config) {
    Deadline::Scope scope(config.deadline);
    FamilyParams params{d, m, 1};
    validate(params);
    if (m < 1) throw std::invalid_argument("certify_family: m must be >= 1");

    MisiurewiczBundle bform = misiurewicz(params, Variable::b);
    CertifyConfig cfg = config;
    if (cfg.polygon_primes.empty()) {
        if (is_prime(d)) cfg.polygon_primes.push_back(d);
        for (std::uint64_t p : default_polygon_primes(primitive_part(bform.misiurewicz))) {
            if (!is_prime(d) || p != d) cfg.polygon_primes.push_back(p);
        }
    }
    if (cfg.extra_candidates.empty()) {
        // linear factors can only be (divisor of d-1) +- d b, i.e. roots e/d
        for (std::uint64_t e : divisors(d - 1)) {
            Rational r(BigInt(static_cast<unsigned long>(e)), BigInt(static_cast<unsigned long>(d)));
            cfg.extra_candidates.push_back({r, RootCandidate::Source::FamilyLinearForm});
            cfg.extra_candidates.push_back({-r, RootCandidate::Source::FamilyLinearForm});
        }
    }

    Certificate audit_b;
    std::optional<RootExclusion> excl_b;
    if (auto cert = polygon_stages(bform.misiurewicz, cfg, audit_b, excl_b)) {
        check_consistency(*cert, excl_b);
        return *cert;
    }

    MisiurewiczBundle aform = misiurewicz(params, Variable::a);
    Certificate audit_a;
    std::optional<RootExclusion> excl_a;
    CertifyConfig cfg_a = cfg;
    cfg_a.extra_candidates.clear(); // the e/d root candidates live in the b coordinate
    if (auto cert = polygon_stages(aform.misiurewicz, cfg_a, audit_a, excl_a)) {
        check_consistency(*cert, excl_a);
        return *cert;
    }

    if (auto cert = modp_stage(bform.misiurewicz, cfg, audit_b)) {
        check_consistency(*cert, excl_b);
        check_consistency(*cert, excl_a);
        return *cert;
    }

    // merge audits for the Inconclusive / Reducible report
    audit_b.polygon_attempts.insert(audit_b.polygon_attempts.end(),
                                    audit_a.polygon_attempts.begin(),
                                    audit_a.polygon_attempts.end());
    if (!audit_a.note.empty() && audit_b.note.empty()) audit_b.note = audit_a.note;
    if (excl_b && excl_b->root_found) return settle(std::move(audit_b), excl_b);
    return settle(std::move(audit_b), excl_a);
}

bool replay(const IntPoly& f, const Certificate& cert) {
    if (cert.verdict == Verdict::Inconclusive || !cert.method) return false;
    IntPoly g = primitive_part(f);
    switch (*cert.method) {
        case Method::TrivialDegree:
            return g.is_zero() ? false : g.degree() <= 1;
        case Method::EisensteinPolygon: {
            if (!cert.prime || !cert.polygon) return false;
            NewtonPolygon np = newton_polygon(g, *cert.prime);
            return np == *cert.polygon && is_eisenstein(np);
        }
        case Method::PolygonPlusRootExclusion: {
            if (!cert.prime || !cert.polygon) return false;
            NewtonPolygon np = newton_polygon(g, *cert.prime);
            if (np != *cert.polygon) return false;
            const std::size_t deg = g.degree();
            auto cands = factor_degree_candidates(np);
            for (std::size_t c : cands) {
                if (c != 1 && c != deg - 1) return false;
            }
            // every recorded candidate must evaluate away from zero, and the
            // recorded list must cover the full candidate set
            RootExclusion fresh = rational_root_exclusion(g);
            if (!fresh.complete || fresh.root_found) return false;
            std::set<std::pair<std::string, std::string>> recorded;
            for (const RootCandidate& c : cert.excluded_roots) {
                if (eval(g, c.value).is_zero()) return false;
                recorded.insert({c.value.num().to_decimal(), c.value.den().to_decimal()});
            }
            for (const RootCandidate& c : fresh.excluded) {
                if (!recorded.count({c.value.num().to_decimal(), c.value.den().to_decimal()})) {
                    return false;
                }
            }
            return true;
        }
        case Method::ModP:
            return cert.prime && modp_irreducible(modp_reduce(g, *cert.prime));
        case Method::RationalRootFound:
            return cert.rational_root && eval(g, *cert.rational_root).is_zero();
    }
    return false;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Irreducible: return "Irreducible";
        case Verdict::Reducible: return "Reducible";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

const char* to_string(Method m) {
    switch (m) {
        case Method::TrivialDegree: return "TrivialDegree";
        case Method::EisensteinPolygon: return "EisensteinPolygon";
        case Method::PolygonPlusRootExclusion: return "PolygonPlusRootExclusion";
        case Method::ModP: return "ModP";
        case Method::RationalRootFound: return "RationalRootFound";
    }
    return "?";
}

} // namespace mz
