#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyauto/errors.hpp"

namespace polyauto {

// An element of the coefficient ring R = Z[t]: exact univariate polynomial
// with arbitrary-precision integer coefficients.  Canonical form stores no
// trailing zero coefficient; zero is the empty sequence.
class RingElem {
public:
    RingElem() = default;
    RingElem(long n);
    explicit RingElem(const mpz_class& n);
    explicit RingElem(std::vector<mpz_class> coeffs);

    // t^k
    static RingElem t(unsigned k = 1);
    // c * t^k
    static RingElem term(const mpz_class& c, unsigned k);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_unit() const; // the units of Z[t] are +1 and -1

    // Degree in t; -1 for the zero element.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    // Coefficient of t^i (zero beyond the stored length).
    const mpz_class& coeff(std::size_t i) const;
    // Leading coefficient; fails on zero.
    const mpz_class& lc() const;
    // Sign of the leading coefficient; 0 for the zero element.
    int sign() const;

    RingElem operator-() const;
    RingElem& operator+=(const RingElem& o);
    RingElem& operator-=(const RingElem& o);
    RingElem& operator*=(const RingElem& o);
    friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
    friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
    friend RingElem operator*(const RingElem& a, const RingElem& b);
    bool operator==(const RingElem& o) const = default;

    RingElem pow(unsigned k) const;

    // gcd of the integer coefficients, non-negative; 0 for the zero element.
    mpz_class int_content() const;
    // this / int_content, keeping the leading sign; zero stays zero.
    RingElem primitive_part() const;
    // Unit-normalized: leading integer coefficient made positive.
    RingElem normalized() const;

    std::string str() const;

    const std::vector<mpz_class>& coeffs() const { return c_; }

private:
    std::vector<mpz_class> c_;
    void trim();
};

// true iff x = d*q for some q in Z[t]; d must be nonzero.
bool divides(const RingElem& d, const RingElem& x);
// x / d when it exists.
std::optional<RingElem> try_exact_div(const RingElem& x, const RingElem& d);
// x / d, throwing DivisionError when d does not divide x.
RingElem exact_div(const RingElem& x, const RingElem& d);
// Normalized gcd (positive leading coefficient); gcd(x,0) = normalized x.
// gcd(0,0) is a DomainError.
RingElem gcd(const RingElem& x, const RingElem& y);

// Explicit certificate that the ideal (x, y) is all of Z[t]:
// a pair (u, v) with u*x + v*y = 1, when one exists.
std::optional<std::pair<RingElem, RingElem>> unit_bezout(const RingElem& x,
                                                         const RingElem& y);

// A reduced fraction over Z[t].  Canonical form: nonzero denominator with
// positive leading coefficient and gcd(num, den) a unit.
class RingFrac {
public:
    RingFrac() : num_(0), den_(1) {}
    RingFrac(long n) : num_(n), den_(1) {}
    RingFrac(const RingElem& n) : num_(n), den_(1) {}
    RingFrac(RingElem num, RingElem den);

    const RingElem& num() const { return num_; }
    const RingElem& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_.is_one(); }

    RingFrac operator-() const;
    friend RingFrac operator+(const RingFrac& a, const RingFrac& b);
    friend RingFrac operator-(const RingFrac& a, const RingFrac& b);
    friend RingFrac operator*(const RingFrac& a, const RingFrac& b);
    friend RingFrac operator/(const RingFrac& a, const RingFrac& b);
    RingFrac inverse() const;
    bool operator==(const RingFrac& o) const = default;

    std::string str() const;

private:
    RingElem num_;
    RingElem den_;
};

} // namespace polyauto
