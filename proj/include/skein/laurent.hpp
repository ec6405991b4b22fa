/*
   laurent.hpp -- exact Laurent polynomials in one variable A over Q,
   their fraction field, and cyclotomic order detection.

   A LaurentPoly is a finite sum  sum_e c_e A^e  with e ranging over
   (possibly negative) integers and c_e nonzero rationals.  The units of
   Q[A^{+-1}] are exactly the monomials c*A^k with c in Q^*; every nonzero
   element factors uniquely as (unit) * (canonical associate), where the
   canonical associate has valuation 0, nonzero constant term, and leading
   coefficient 1.
*/

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace skein {

using Rational = mpq_class;
using Integer = mpz_class;

/* Reduced fraction with positive denominator. */
Rational make_rational(long long num, long long den = 1);
Rational rational_gcd(const Rational& a, const Rational& b);

class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly constant(const Rational& c);
    static LaurentPoly monomial(long long exp, const Rational& c);
    /* A^k */
    static LaurentPoly power_of_a(long long k) { return monomial(k, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /* Nonzero monomial, i.e. invertible in Q[A^{+-1}]. */
    bool is_unit() const { return terms_.size() == 1; }

    /* Largest / smallest exponent; defined for nonzero input only. */
    long long degree() const;
    long long valuation() const;
    /* degree - valuation; the Euclidean size used throughout. */
    long long span() const;

    Rational coeff(long long exp) const;
    const std::map<long long, Rational>& terms() const { return terms_; }
    long long term_count() const { return static_cast<long long>(terms_.size()); }

    /* Adds c*A^e, dropping the term if the sum cancels. */
    void add_term(long long exp, const Rational& c);

    /* Multiplication by A^k. */
    LaurentPoly shifted(long long k) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

    /* Human-readable form, e.g. "A^4 + 1" or "-1/2*A^-2". */
    std::string to_string() const;

  private:
    std::map<long long, Rational> terms_;
};

/* p = unit_scalar * A^unit_log * canonical, with canonical monic of valuation 0. */
struct UnitNormalForm {
    LaurentPoly canonical;
    long long unit_log = 0;
    Rational unit_scalar = 0;
};

/* Throws std::invalid_argument on zero: zero has no canonical associate. */
UnitNormalForm unit_normal_form(const LaurentPoly& p);
LaurentPoly canonical_associate(const LaurentPoly& p);
/* Equal up to multiplication by a unit of Q[A^{+-1}]. */
bool associates(const LaurentPoly& a, const LaurentPoly& b);

/* a = quot*b + rem with rem = 0 or span(rem) < span(b) after alignment;
   division is exact in Q[A^{+-1}] whenever b's canonical associate divides a's. */
struct LaurentDivMod {
    LaurentPoly quot;
    LaurentPoly rem;
};
LaurentDivMod laurent_divmod(const LaurentPoly& a, const LaurentPoly& b);
bool laurent_divides(const LaurentPoly& d, const LaurentPoly& a);
/* Throws internal_error if the division leaves a remainder. */
LaurentPoly laurent_divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/* Canonical-associate gcd / lcm; gcd(0,0) throws std::invalid_argument. */
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_lcm(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly laurent_pow(const LaurentPoly& p, unsigned long long n);

/* gcd of numerators / lcm of denominators of the coefficients, as a positive
   rational; content(0) = 0. */
Rational laurent_content(const LaurentPoly& p);

long long euler_phi(long long m);
/* m-th cyclotomic polynomial as an element of Q[A^{+-1}]; memoized. */
const LaurentPoly& cyclotomic_polynomial(long long m);
/* All (m, multiplicity) with Phi_m^multiplicity | p, multiplicity maximal.
   Sorted by m.  Throws std::invalid_argument on zero. */
std::vector<std::pair<long long, int>> cyclotomic_orders(const LaurentPoly& p);
/* Keeps the orders m with m = 2 mod 4: primitive 2N-th roots of unity, N odd. */
std::vector<long long> exceptional_order_filter(const std::vector<long long>& orders);

/*
   Fraction field Q(A).  Stored reduced with canonical denominator (monic,
   valuation 0, nonzero constant term); the representation is unique, so
   equality is componentwise.
*/
class RatFunc {
  public:
    RatFunc() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
    RatFunc(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}

    static RatFunc of(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /* True when the denominator is 1, i.e. the value lies in Q[A^{+-1}]. */
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string() const;

  private:
    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace skein
