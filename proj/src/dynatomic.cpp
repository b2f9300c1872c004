#include "mz/dynatomic.hpp"

#include "mz/deadline.hpp"
#include "mz/errors.hpp"
#include "mz/numbers.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace mz {

void validate(const FamilyParams& params) {
    if (params.d < 2) throw std::invalid_argument("FamilyParams: d must be >= 2");
    if (params.n < 1) throw std::invalid_argument("FamilyParams: n must be >= 1");
}

IntPoly map_multiplier(unsigned d, Variable var) {
    if (var == Variable::a) return IntPoly(Variable::a, {0, 1});
    return IntPoly(Variable::b, {static_cast<long>(d), static_cast<long>(d)});
}

IntPoly outer_divisor(unsigned d, Variable var) {
    if (var == Variable::a) return IntPoly(Variable::a, {-static_cast<long>(d), 1});
    return IntPoly(Variable::b, {0, static_cast<long>(d)});
}

IntPoly fixed_point_unit(unsigned d, Variable var) {
    if (var == Variable::a) return IntPoly(Variable::a, {1 - static_cast<long>(d), 1});
    return IntPoly(Variable::b, {1, static_cast<long>(d)});
}

void OrbitTable::extend_to(std::size_t n) {
    if (entries_.empty()) {
        entries_.emplace_back(IntPoly::constant(var_, BigInt(1)),
                              IntPoly::constant(var_, BigInt(1)));
    }
    const IntPoly mult = map_multiplier(d_, var_);
    const IntPoly scale = IntPoly::constant(var_, BigInt(static_cast<long>(d_) - 1));
    while (entries_.size() <= n) {
        Deadline::check_active();
        const auto& [pn, qn] = entries_.back();
        IntPoly qpow = pow(qn, d_ - 1);
        IntPoly pnext = mult * pn * qpow;
        IntPoly qnext = pow(pn, d_) + scale * (qpow * qn);
        entries_.emplace_back(std::move(pnext), std::move(qnext));
    }
}

OrbitTable orbit_table(unsigned d, std::size_t N, Variable var) {
    if (d < 2) throw std::invalid_argument("orbit_table: d must be >= 2");
    OrbitTable t(d, var);
    t.extend_to(N);
    return t;
}

namespace {

std::mutex g_table_mutex;
std::map<std::pair<unsigned, Variable>, std::shared_ptr<const OrbitTable>> g_table_cache;

} // namespace

std::shared_ptr<const OrbitTable> orbit_table_cached(unsigned d, std::size_t N, Variable var) {
    const auto key = std::make_pair(d, var);
    {
        std::lock_guard lock(g_table_mutex);
        auto it = g_table_cache.find(key);
        if (it != g_table_cache.end() && it->second->size() > N) return it->second;
    }
    // Build outside the lock; tables are immutable once published.
    auto grown = std::make_shared<OrbitTable>(orbit_table(d, N, var));
    std::lock_guard lock(g_table_mutex);
    auto& slot = g_table_cache[key];
    if (!slot || slot->size() <= N) slot = std::move(grown);
    return slot;
}

namespace {

// Product over divisors k of n of factor(k)^(mu(n/k)), returned as the exact
// quotient of the positive-exponent product by the negative-exponent one.
template <typename FactorFn>
IntPoly mobius_product(unsigned n, Variable var, FactorFn&& factor) {
    IntPoly numer = IntPoly::constant(var, BigInt(1));
    IntPoly denom = IntPoly::constant(var, BigInt(1));
    for (std::uint64_t k : divisors(n)) {
        int mu = mobius(n / k);
        if (mu == 1) {
            numer *= factor(static_cast<std::size_t>(k));
        } else if (mu == -1) {
            denom *= factor(static_cast<std::size_t>(k));
        }
    }
    return divexact(numer, denom);
}

void require_table(const FamilyParams& params, const OrbitTable& table, std::size_t need) {
    if (table.d() != params.d) {
        throw std::invalid_argument("orbit table built for a different degree");
    }
    if (table.size() <= need) {
        throw std::invalid_argument("orbit table too short: need index " + std::to_string(need));
    }
}

} // namespace

IntPoly dynatomic_eval(const FamilyParams& params, const OrbitTable& table) {
    validate(params);
    require_table(params, table, params.n);
    return mobius_product(params.n, table.variable(), [&](std::size_t k) {
        return table.den(k) - table.num(k);
    });
}

IntPoly pre_misiurewicz(const FamilyParams& params, const OrbitTable& table) {
    validate(params);
    require_table(params, table, params.m + params.n);
    if (params.m == 0) return dynatomic_eval(params, table);

    // The level-m factor for divisor k is q_{m+k} p_m - p_{m+k} q_m; the same
    // product one level down is divided out.
    auto level = [&](std::size_t base, std::size_t k) {
        return table.den(base + k) * table.num(base) - table.num(base + k) * table.den(base);
    };
    const std::size_t m = params.m;
    IntPoly hi_pos = IntPoly::constant(table.variable(), BigInt(1));
    IntPoly hi_neg = hi_pos, lo_pos = hi_pos, lo_neg = hi_pos;
    for (std::uint64_t k : divisors(params.n)) {
        int mu = mobius(params.n / k);
        if (mu == 0) continue;
        IntPoly hi = level(m, static_cast<std::size_t>(k));
        IntPoly lo = level(m - 1, static_cast<std::size_t>(k));
        if (mu == 1) {
            hi_pos *= hi;
            lo_pos *= lo;
        } else {
            hi_neg *= hi;
            lo_neg *= lo;
        }
    }
    return divexact(hi_pos * lo_neg, hi_neg * lo_pos);
}

MisiurewiczBundle misiurewicz(const FamilyParams& params, Variable var, InnerQuotientRoute route) {
    validate(params);
    if (params.m < 1) throw std::invalid_argument("misiurewicz: m must be >= 1");
    if (params.n != 1) throw std::invalid_argument("misiurewicz: closed form requires n = 1");
    const unsigned d = params.d;
    auto table = orbit_table_cached(d, params.m + 1, var);

    const IntPoly& qprev = table->den(params.m - 1);
    const IntPoly& qm = table->den(params.m);
    const IntPoly mult = map_multiplier(d, var);

    Deadline::check_active();
    IntPoly qprev_d = pow(qprev, d);          // q_{m-1}^d
    IntPoly sigma = mult * qprev_d;           // a q_{m-1}^d resp. (b+1)d s_{m-1}^d
    IntPoly tau = qm - sigma;
    IntPoly lead = pow(mult, d) * pow(qprev_d, d - 1); // a^d q_{m-1}^{d(d-1)}

    // Inner quotient (q_m^d - sigma^d) / (q_m - sigma).
    IntPoly inner(var);
    if (route == InnerQuotientRoute::LongDivision) {
        inner = divexact(pow(qm, d) - pow(sigma, d), tau);
    } else {
        // sum_{j=0}^{d-1} q_m^j sigma^(d-1-j), accumulated Horner-style.
        inner = IntPoly::constant(var, BigInt(1));
        IntPoly qm_pow = IntPoly::constant(var, BigInt(1));
        for (unsigned j = 1; j < d; ++j) {
            Deadline::check_active();
            qm_pow *= qm;
            inner = inner * sigma + qm_pow;
        }
    }

    IntPoly numerator = lead - fixed_point_unit(d, var) * inner;
    IntPoly gm = divexact(numerator, outer_divisor(d, var));

    MisiurewiczBundle bundle{params,
                             var,
                             pre_misiurewicz(params, *table),
                             std::move(gm),
                             qprev,
                             std::move(sigma),
                             std::move(tau),
                             std::nullopt};
    if (var == Variable::b && params.m >= 2) bundle.F = std::move(qprev_d);
    return bundle;
}

SigmaTau sigma_tau(const FamilyParams& params) {
    validate(params);
    if (params.m < 1) throw std::invalid_argument("sigma_tau: m must be >= 1");
    const unsigned d = params.d;
    auto table = orbit_table_cached(d, params.m, Variable::b);
    IntPoly spow = pow(table->den(params.m - 1), d);
    IntPoly sigma = map_multiplier(d, Variable::b) * spow;
    IntPoly tau = table->den(params.m) - sigma;
    SigmaTau out{std::move(sigma), std::move(tau), std::nullopt};
    if (params.m >= 2) out.F = std::move(spow);
    return out;
}

bool expansion_check(const FamilyParams& params, Variable var) {
    MisiurewiczBundle bundle = misiurewicz(params, var);
    const unsigned d = params.d;
    const IntPoly D = outer_divisor(d, var);

    IntPoly lhs = D * bundle.misiurewicz;

    // -D (d-1) sigma^{d-1} - U * sum_{k=0}^{d-2} C(d,k) sigma^k tau^{d-1-k}
    IntPoly sum(var);
    IntPoly sigma_pow = IntPoly::constant(var, BigInt(1));
    std::vector<IntPoly> tau_pows;
    tau_pows.reserve(d);
    tau_pows.push_back(IntPoly::constant(var, BigInt(1)));
    for (unsigned j = 1; j <= d - 1; ++j) tau_pows.push_back(tau_pows.back() * bundle.tau);
    for (unsigned k = 0; k + 1 < d; ++k) {
        sum += (sigma_pow * tau_pows[d - 1 - k]).scaled(binomial(d, k));
        sigma_pow *= bundle.sigma;
    }
    IntPoly rhs = -(D.scaled(BigInt(static_cast<long>(d) - 1)) * sigma_pow) -
                  fixed_point_unit(d, var) * sum;
    return lhs == rhs;
}

} // namespace mz
