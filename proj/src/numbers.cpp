#include "mz/numbers.hpp"

#include "mz/errors.hpp"

#include <algorithm>

namespace mz {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t f = 5; f * f <= n; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    std::uint64_t c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

Valuation int_valuation(const BigInt& n, std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime("int_valuation: p = " + std::to_string(p) + " is not prime");
    if (n.is_zero()) return Valuation::infinity();
    BigInt reduced;
    BigInt prime(static_cast<unsigned long>(p));
    mp_bitcnt_t e = mpz_remove(reduced.raw(), n.raw(), prime.raw());
    return Valuation::finite(static_cast<std::uint64_t>(e));
}

int mobius(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("mobius: n must be >= 1");
    int sign = 1;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            n /= f;
            if (n % f == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> lo, hi;
    for (std::uint64_t f = 1; f * f <= n; ++f) {
        if (n % f == 0) {
            lo.push_back(f);
            if (f != n / f) hi.push_back(n / f);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p) {
    std::uint64_t total = 0;
    for (std::uint64_t q = p; q <= n; q *= p) {
        total += n / q;
        if (q > n / p) break; // next q would overflow
    }
    return total;
}

Factorization trial_factor(const BigInt& n, std::uint64_t bound) {
    if (n.is_zero()) throw std::invalid_argument("trial_factor: n must be nonzero");
    Factorization out;
    out.cofactor = abs(n);
    for (std::uint64_t p = 2; p <= bound && !out.cofactor.is_one(); p = next_prime(p)) {
        BigInt prime(static_cast<unsigned long>(p));
        if (out.cofactor.divisible_by(prime)) {
            BigInt reduced;
            mp_bitcnt_t e = mpz_remove(reduced.raw(), out.cofactor.raw(), prime.raw());
            out.factors[p] = static_cast<unsigned>(e);
            out.cofactor = reduced;
        }
        // once the cofactor drops below p^2 it is prime or 1
        if (!out.cofactor.is_one() && out.cofactor.fits_slong()) {
            std::uint64_t c = static_cast<std::uint64_t>(out.cofactor.to_long());
            if (c / p < p) {
                out.factors[c] += 1;
                out.cofactor = BigInt(1);
                break;
            }
        }
    }
    return out;
}

std::vector<BigInt> all_divisors(const Factorization& f, std::size_t cap) {
    if (!f.complete()) return {};
    std::size_t count = 1;
    for (const auto& [p, e] : f.factors) {
        count *= (e + 1);
        if (count > cap) return {};
    }
    std::vector<BigInt> out{BigInt(1)};
    for (const auto& [p, e] : f.factors) {
        std::size_t base = out.size();
        BigInt prime(static_cast<unsigned long>(p));
        BigInt power(1);
        for (unsigned k = 1; k <= e; ++k) {
            power *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mz
