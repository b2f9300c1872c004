#pragma once

/**
 * @file bigint.hpp
 * @brief Arbitrary-precision signed integer, a thin value wrapper over GMP's mpz.
 *
 * Invariants: canonical zero (sign of zero is 0, no negative zero) and
 * to_decimal()/from-string round-trip is the identity. Values are immutable
 * for sharing purposes once handed out; all operators return fresh values.
 */

#include <gmp.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace mz {

class BigInt {
public:
    BigInt() { mpz_init(z_); }
    BigInt(int v) : BigInt(static_cast<long>(v)) {}
    BigInt(long v) { mpz_init_set_si(z_, v); }
    BigInt(unsigned long v) { mpz_init_set_ui(z_, v); }

    explicit BigInt(const std::string& decimal) {
        if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("BigInt: invalid decimal string: " + decimal);
        }
    }

    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    ~BigInt() { mpz_clear(z_); }

    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }

    void swap(BigInt& o) noexcept { mpz_swap(z_, o.z_); }

    std::string to_decimal() const {
        // 0 round-trips as "0", negatives with a leading '-'.
        std::string s(mpz_sizeinbase(z_, 10) + 2, '\0');
        mpz_get_str(s.data(), 10, z_);
        s.resize(s.find('\0'));
        return s;
    }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
    bool is_odd() const { return mpz_odd_p(z_) != 0; }

    bool fits_slong() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const {
        if (!fits_slong()) throw std::overflow_error("BigInt: does not fit in long");
        return mpz_get_si(z_);
    }

    /// Mantissa in [0.5,1) and binary exponent such that value = m * 2^exp.
    double to_double_2exp(long& exp) const { return mpz_get_d_2exp(&exp, z_); }

    std::size_t bit_size() const { return mpz_sizeinbase(z_, 2); }

    // ---- arithmetic ----
    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.z_, z_);
        return r;
    }
    BigInt& operator+=(const BigInt& b) {
        mpz_add(z_, z_, b.z_);
        return *this;
    }
    BigInt& operator-=(const BigInt& b) {
        mpz_sub(z_, z_, b.z_);
        return *this;
    }
    BigInt& operator*=(const BigInt& b) {
        mpz_mul(z_, z_, b.z_);
        return *this;
    }

    /// *this += a*b without a temporary; the convolution workhorse.
    void add_mul(const BigInt& a, const BigInt& b) { mpz_addmul(z_, a.z_, b.z_); }
    void sub_mul(const BigInt& a, const BigInt& b) { mpz_submul(z_, a.z_, b.z_); }

    bool divisible_by(const BigInt& d) const { return mpz_divisible_p(z_, d.z_) != 0; }

    /// Exact quotient; behavior undefined unless divisible_by(d).
    BigInt divexact(const BigInt& d) const {
        BigInt r;
        mpz_divexact(r.z_, z_, d.z_);
        return r;
    }

    friend BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt abs(const BigInt& a) {
        BigInt r;
        mpz_abs(r.z_, a.z_);
        return r;
    }
    friend BigInt pow(const BigInt& base, unsigned long e) {
        BigInt r;
        mpz_pow_ui(r.z_, base.z_, e);
        return r;
    }

    friend int compare(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_); }
    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
        return os << v.to_decimal();
    }

    // Raw access for the few call sites that need GMP primitives directly
    // (p-adic valuation, modular reduction).
    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

private:
    mpz_t z_;
};

inline void swap(BigInt& a, BigInt& b) noexcept { a.swap(b); }

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.raw(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.raw(), n, k);
    return r;
}

} // namespace mz
