#pragma once

// Small number-theoretic helpers shared by the polygon and certification
// machinery. All primality here is deterministic trial division; every prime
// we ever consume is small.

#include "mz/bigint.hpp"
#include "mz/valuation.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace mz {

bool is_prime(std::uint64_t n);

/// First prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// ord_p(n): largest e with p^e | n; INFINITY for n = 0. Throws NotPrime.
Valuation int_valuation(const BigInt& n, std::uint64_t p);

/// Mobius function; 0 unless n squarefree, else (-1)^(#prime factors). n >= 1.
int mobius(std::uint64_t n);

/// Sorted divisors of n >= 1 (machine-size n).
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Distinct prime factors of n >= 2, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// ord_p(n!) by Legendre's formula.
std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p);

struct Factorization {
    std::map<std::uint64_t, unsigned> factors; // prime -> exponent
    BigInt cofactor;                           // 1 iff complete
    bool complete() const { return cofactor.is_one(); }
};

/// Trial division of |n| by primes <= bound. n must be nonzero.
Factorization trial_factor(const BigInt& n, std::uint64_t bound);

/// All positive divisors from a complete factorization, capped; empty if the
/// divisor count would exceed the cap.
std::vector<BigInt> all_divisors(const Factorization& f, std::size_t cap);

} // namespace mz
