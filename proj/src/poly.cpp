#include "mz/poly.hpp"

#include "mz/deadline.hpp"
#include "mz/errors.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mz {

namespace {

// Below this many coefficient products the parallel kernel is not worth the
// fork/join overhead.
constexpr std::size_t kParallelProductThreshold = 4096;

void require_same_variable(const IntPoly& f, const IntPoly& g, const char* op) {
    if (f.variable() != g.variable()) {
        throw VariableMismatch(std::string(op) + ": operands in different variables '" +
                               variable_name(f.variable()) + "' and '" +
                               variable_name(g.variable()) + "'");
    }
}

const BigInt kZero(0);

} // namespace

char variable_name(Variable v) {
    switch (v) {
        case Variable::a: return 'a';
        case Variable::b: return 'b';
        case Variable::x: return 'x';
    }
    return '?';
}

Variable variable_from_name(char name) {
    switch (name) {
        case 'a': return Variable::a;
        case 'b': return Variable::b;
        case 'x': return Variable::x;
    }
    throw std::invalid_argument(std::string("unknown variable '") + name + "'");
}

IntPoly::IntPoly(Variable v, std::initializer_list<long> coeffs) : var_(v) {
    c_.reserve(coeffs.size());
    for (long c : coeffs) c_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(Variable v, BigInt c) {
    IntPoly f(v);
    if (!c.is_zero()) f.c_.push_back(std::move(c));
    return f;
}

IntPoly IntPoly::monomial(Variable v, BigInt coeff, std::size_t degree) {
    IntPoly f(v);
    if (!coeff.is_zero()) {
        f.c_.assign(degree, BigInt(0));
        f.c_.push_back(std::move(coeff));
    }
    return f;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::size_t IntPoly::degree() const {
    if (c_.empty()) throw ZeroPolynomial("degree of the zero polynomial is undefined");
    return c_.size() - 1;
}

const BigInt& IntPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const BigInt& IntPoly::leading() const {
    if (c_.empty()) throw ZeroPolynomial("zero polynomial has no leading coefficient");
    return c_.back();
}

bool operator==(const IntPoly& f, const IntPoly& g) {
    return f.var_ == g.var_ && f.c_ == g.c_;
}

IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    require_same_variable(f, g, "poly add");
    IntPoly h(f.var_);
    h.c_.resize(std::max(f.c_.size(), g.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < h.c_.size(); ++i) {
        if (i < f.c_.size()) h.c_[i] += f.c_[i];
        if (i < g.c_.size()) h.c_[i] += g.c_[i];
    }
    h.trim();
    return h;
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) {
    require_same_variable(f, g, "poly sub");
    IntPoly h(f.var_);
    h.c_.resize(std::max(f.c_.size(), g.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < h.c_.size(); ++i) {
        if (i < f.c_.size()) h.c_[i] += f.c_[i];
        if (i < g.c_.size()) h.c_[i] -= g.c_[i];
    }
    h.trim();
    return h;
}

IntPoly IntPoly::operator-() const {
    IntPoly h(var_);
    h.c_.reserve(c_.size());
    for (const BigInt& c : c_) h.c_.push_back(-c);
    return h;
}

IntPoly IntPoly::scaled(const BigInt& c) const {
    IntPoly h(var_);
    if (c.is_zero()) return h;
    h.c_.reserve(c_.size());
    for (const BigInt& v : c_) h.c_.push_back(v * c);
    return h;
}

IntPoly IntPoly::shifted_up(std::size_t k) const {
    if (is_zero()) return *this;
    IntPoly h(var_);
    h.c_.reserve(c_.size() + k);
    h.c_.assign(k, BigInt(0));
    h.c_.insert(h.c_.end(), c_.begin(), c_.end());
    return h;
}

std::size_t IntPoly::trailing_zeros() const {
    if (c_.empty()) throw ZeroPolynomial("trailing_zeros of the zero polynomial is undefined");
    std::size_t i = 0;
    while (c_[i].is_zero()) ++i;
    return i;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string t = c_[i].to_decimal();
        if (!first && t[0] != '-') os << "+";
        first = false;
        if (i == 0) {
            os << t;
            continue;
        }
        if (t == "1") {
        } else if (t == "-1") {
            os << "-";
        } else {
            os << t << "*";
        }
        os << variable_name(var_);
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

namespace {

std::vector<BigInt> convolve_serial(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
    std::vector<BigInt> out(f.size() + g.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            out[i + j].add_mul(f[i], g[j]);
        }
    }
    return out;
}

std::vector<BigInt> convolve_parallel(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
    const std::ptrdiff_t nf = static_cast<std::ptrdiff_t>(f.size());
    const std::ptrdiff_t ng = static_cast<std::ptrdiff_t>(g.size());
    std::vector<BigInt> out(f.size() + g.size() - 1, BigInt(0));
    // Each output coefficient is an independent inner product of a diagonal.
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t k = 0; k < nf + ng - 1; ++k) {
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, k - ng + 1);
        const std::ptrdiff_t hi = std::min(k, nf - 1);
        BigInt acc;
        for (std::ptrdiff_t i = lo; i <= hi; ++i) {
            acc.add_mul(f[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(k - i)]);
        }
        out[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return out;
}

} // namespace

IntPoly mul_serial(const IntPoly& f, const IntPoly& g) {
    require_same_variable(f, g, "poly mul");
    if (f.is_zero() || g.is_zero()) return IntPoly(f.variable());
    return IntPoly(f.variable(), convolve_serial(f.coeffs(), g.coeffs()));
}

IntPoly mul_parallel(const IntPoly& f, const IntPoly& g) {
    require_same_variable(f, g, "poly mul");
    if (f.is_zero() || g.is_zero()) return IntPoly(f.variable());
    return IntPoly(f.variable(), convolve_parallel(f.coeffs(), g.coeffs()));
}

namespace {

IntPoly mul_dispatch(const IntPoly& f, const IntPoly& g) {
    if (f.term_count() * g.term_count() >= kParallelProductThreshold) {
        return mul_parallel(f, g);
    }
    return mul_serial(f, g);
}

} // namespace

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    require_same_variable(f, g, "poly mul");
    if (f.is_zero() || g.is_zero()) return IntPoly(f.variable());
    Deadline::check_active();
    // The family polynomials in the shifted coordinate carry huge integer
    // content; by Gauss's lemma content is multiplicative, so convolving the
    // primitive parts and scaling back is exact and much cheaper.
    BigInt cf, cg;
    IntPoly pf = primitive_part(f, &cf);
    IntPoly pg = primitive_part(g, &cg);
    BigInt c = cf * cg;
    IntPoly prod = mul_dispatch(pf, pg);
    return c.is_one() ? prod : prod.scaled(c);
}

IntPoly pow(const IntPoly& f, unsigned long k) {
    if (k == 0) return IntPoly::constant(f.variable(), BigInt(1));
    if (f.is_zero()) return f;
    BigInt cf;
    IntPoly base = primitive_part(f, &cf);
    const unsigned long k0 = k;
    IntPoly acc = IntPoly::constant(f.variable(), BigInt(1));
    while (k > 1) {
        Deadline::check_active();
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    acc *= base;
    return cf.is_one() ? acc : acc.scaled(pow(cf, k0));
}

IntPoly divexact(const IntPoly& f, const IntPoly& g) {
    require_same_variable(f, g, "poly divexact");
    if (g.is_zero()) throw ZeroPolynomial("divexact: zero divisor");
    if (f.is_zero()) return IntPoly(f.variable());
    if (f.degree() < g.degree()) throw NonExactDivision("divexact: degree of dividend below divisor");

    // Content splits off multiplicatively: f = g*h forces content(g) to
    // divide content(f), and the primitive parts divide exactly.
    BigInt cf, cg;
    IntPoly pf = primitive_part(f, &cf);
    IntPoly pg = primitive_part(g, &cg);
    if (!cg.is_one() || !cf.is_one()) {
        if (!cf.divisible_by(cg)) throw NonExactDivision("divexact: content does not divide");
        IntPoly q = divexact(pf, pg);
        BigInt scale = cf.divexact(cg);
        return scale.is_one() ? q : q.scaled(scale);
    }

    const std::size_t dg = g.degree();
    const BigInt& glead = g.leading();
    std::vector<BigInt> rem = f.coeffs();
    std::vector<BigInt> quot(f.degree() - dg + 1, BigInt(0));

    const std::vector<BigInt>& gc = g.coeffs();
    const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(dg);
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt& top = rem[k + dg];
        if (top.is_zero()) continue;
        if (!top.divisible_by(glead)) {
            throw NonExactDivision("divexact: non-integral quotient coefficient at degree " +
                                   std::to_string(k));
        }
        BigInt qc = top.divexact(glead);
        top = BigInt(0);
        if (rows > 0) {
            if (static_cast<std::size_t>(rows) * qc.bit_size() / 64 >= kParallelProductThreshold) {
                Deadline::check_active();
#pragma omp parallel for schedule(static)
                for (std::ptrdiff_t j = 0; j < rows; ++j) {
                    rem[k + static_cast<std::size_t>(j)].sub_mul(qc, gc[static_cast<std::size_t>(j)]);
                }
            } else {
                for (std::ptrdiff_t j = 0; j < rows; ++j) {
                    rem[k + static_cast<std::size_t>(j)].sub_mul(qc, gc[static_cast<std::size_t>(j)]);
                }
            }
        }
        quot[k] = std::move(qc);
    }
    for (std::size_t i = 0; i < dg; ++i) {
        if (!rem[i].is_zero()) throw NonExactDivision("divexact: nonzero remainder");
    }
    return IntPoly(f.variable(), std::move(quot));
}

IntPoly substitute_linear(const IntPoly& f, const BigInt& c0, const BigInt& c1, Variable newvar) {
    if (c1.is_zero()) throw std::invalid_argument("substitute_linear: c1 must be nonzero");
    IntPoly result(newvar);
    if (f.is_zero()) return result;
    // Horner: result = (...(c_n*(c1 t + c0) + c_{n-1})*(c1 t + c0) + ...) + c_0
    std::vector<BigInt> acc{f.leading()};
    for (std::size_t i = f.degree(); i-- > 0;) {
        std::vector<BigInt> next(acc.size() + 1, BigInt(0));
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1].add_mul(acc[j], c1);
            next[j].add_mul(acc[j], c0);
        }
        next[0] += f.coeff(i);
        acc = std::move(next);
    }
    return IntPoly(newvar, std::move(acc));
}

Rational eval(const IntPoly& f, const Rational& x) {
    if (f.is_zero()) return Rational(0);
    // Clear denominators: f(n/d) = (sum c_i n^i d^(deg-i)) / d^deg.
    BigInt num = f.leading();
    BigInt dpow(1);
    for (std::size_t i = f.degree(); i-- > 0;) {
        dpow *= x.den();
        num = num * x.num() + f.coeff(i) * dpow;
    }
    return Rational(num, pow(x.den(), static_cast<unsigned long>(f.degree())));
}

BigInt eval(const IntPoly& f, const BigInt& x) {
    if (f.is_zero()) return BigInt(0);
    BigInt acc = f.leading();
    for (std::size_t i = f.degree(); i-- > 0;) {
        acc = acc * x + f.coeff(i);
    }
    return acc;
}

BigInt content(const IntPoly& f) {
    BigInt g(0);
    for (const BigInt& c : f.coeffs()) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& f, BigInt* content_out) {
    BigInt c = content(f);
    if (content_out) *content_out = c;
    if (f.is_zero() || c.is_one()) return f;
    std::vector<BigInt> out;
    out.reserve(f.term_count());
    for (const BigInt& v : f.coeffs()) out.push_back(v.divexact(c));
    return IntPoly(f.variable(), std::move(out));
}

} // namespace mz
