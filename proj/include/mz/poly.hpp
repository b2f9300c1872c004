#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over BigInt, tagged by variable.
 *
 * Coefficients are stored in ascending degree order and the stored leading
 * coefficient is nonzero; the zero polynomial is the empty list and has no
 * degree. Operations mixing variable tags throw VariableMismatch.
 *
 * Multiplication and exact division run on an OpenMP-parallel convolution
 * kernel above a size threshold; mul_serial is the reference kernel and is
 * kept (and tested against) independently.
 */

#include "mz/bigint.hpp"
#include "mz/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mz {

enum class Variable : unsigned char { a, b, x };

char variable_name(Variable v);
Variable variable_from_name(char name); // throws std::invalid_argument

class IntPoly {
public:
    explicit IntPoly(Variable v = Variable::x) : var_(v) {}
    IntPoly(Variable v, std::vector<BigInt> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }
    IntPoly(Variable v, std::initializer_list<long> coeffs);

    static IntPoly constant(Variable v, BigInt c);
    static IntPoly monomial(Variable v, BigInt coeff, std::size_t degree);

    Variable variable() const { return var_; }
    bool is_zero() const { return c_.empty(); }

    /// Degree of a nonzero polynomial; throws ZeroPolynomial on zero.
    std::size_t degree() const;

    std::size_t term_count() const { return c_.size(); }

    /// Coefficient of the i-th power; 0 beyond the stored range.
    const BigInt& coeff(std::size_t i) const;

    const BigInt& leading() const; // throws ZeroPolynomial
    const std::vector<BigInt>& coeffs() const { return c_; }

    friend bool operator==(const IntPoly& f, const IntPoly& g);
    friend bool operator!=(const IntPoly& f, const IntPoly& g) { return !(f == g); }

    friend IntPoly operator+(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator-(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator*(const IntPoly& f, const IntPoly& g);
    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& g) { return *this = *this + g; }
    IntPoly& operator-=(const IntPoly& g) { return *this = *this - g; }
    IntPoly& operator*=(const IntPoly& g) { return *this = *this * g; }

    IntPoly scaled(const BigInt& c) const;
    IntPoly shifted_up(std::size_t k) const; // multiply by the k-th power of the variable

    /// Index of the lowest nonzero coefficient (multiplicity of the variable).
    std::size_t trailing_zeros() const; // throws ZeroPolynomial

    std::string to_string() const;

private:
    Variable var_;
    std::vector<BigInt> c_;
    void trim();
};

/// Serial reference convolution.
IntPoly mul_serial(const IntPoly& f, const IntPoly& g);

/// OpenMP convolution over output coefficients; same contract as mul_serial.
IntPoly mul_parallel(const IntPoly& f, const IntPoly& g);

IntPoly pow(const IntPoly& f, unsigned long k);

/// Exact quotient f/g over Z; throws NonExactDivision at the first
/// non-integral quotient coefficient or on a nonzero remainder.
IntPoly divexact(const IntPoly& f, const IntPoly& g);

/// f(c1*t + c0) in the variable newvar; requires c1 != 0.
IntPoly substitute_linear(const IntPoly& f, const BigInt& c0, const BigInt& c1, Variable newvar);

Rational eval(const IntPoly& f, const Rational& x);
BigInt eval(const IntPoly& f, const BigInt& x);

/// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
BigInt content(const IntPoly& f);

/// f / content(f); sign of the leading coefficient is preserved.
IntPoly primitive_part(const IntPoly& f, BigInt* content_out = nullptr);

} // namespace mz
