/*
   torus.hpp -- the based skein algebra of the torus in the symmetrized
   curve basis.

   Basis elements (x,y)_T are indexed by sign classes of integer pairs:
   (x,y)_T = (-x,-y)_T, canonical representative has x > 0, or x = 0 and
   y >= 0.  For gcd(x,y) = d and primitive direction (x,y)/d, the element
   (x,y)_T is the degree-d Chebyshev polynomial (first kind, two-term
   normalization T_0 = 2) of the primitive curve.  The empty link is
   (1/2)*(0,0)_T.

   The product obeys the two-term convolution
       (x,y)_T * (z,t)_T = A^{xt-yz} (x+z, y+t)_T + A^{yz-xt} (x-z, y-t)_T.
*/

#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

struct PairClass {
    long long x = 0;
    long long y = 0;

    /* Canonical sign-class representative. */
    static PairClass of(long long x, long long y) {
        if (x < 0 || (x == 0 && y < 0)) return PairClass{-x, -y};
        return PairClass{x, y};
    }
    bool is_canonical() const { return x > 0 || (x == 0 && y >= 0); }
    bool is_origin() const { return x == 0 && y == 0; }
    auto operator<=>(const PairClass&) const = default;
};

class TorusElement {
  public:
    TorusElement() = default;

    static TorusElement basis(long long x, long long y) {
        TorusElement e;
        e.add_term(x, y, LaurentPoly::one());
        return e;
    }
    /* The empty link, (1/2)*(0,0)_T. */
    static TorusElement empty_link() {
        TorusElement e;
        e.add_term(0, 0, LaurentPoly::constant(make_rational(1, 2)));
        return e;
    }

    bool is_zero() const { return support_.empty(); }
    long long term_count() const { return static_cast<long long>(support_.size()); }
    const std::map<PairClass, LaurentPoly>& terms() const { return support_; }
    LaurentPoly coeff(long long x, long long y) const;

    /* Canonicalizes the pair, merges, drops zero coefficients. */
    void add_term(long long x, long long y, const LaurentPoly& c);
    void add_term(PairClass cls, const LaurentPoly& c) { add_term(cls.x, cls.y, c); }

    TorusElement operator-() const;
    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);
    TorusElement& operator*=(const LaurentPoly& c);
    TorusElement& operator*=(const Rational& c);

    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    friend TorusElement operator*(TorusElement a, const LaurentPoly& c) { return a *= c; }
    friend TorusElement operator*(const LaurentPoly& c, TorusElement a) { return a *= c; }
    friend bool operator==(const TorusElement& a, const TorusElement& b) {
        return a.support_ == b.support_;
    }
    friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

    std::string to_string() const;

  private:
    std::map<PairClass, LaurentPoly> support_;
};

/* Two-term convolution product, extended bilinearly. */
TorusElement fg_mult(const TorusElement& a, const TorusElement& b);

/* Integer polynomial in one variable; coefficient of X^k at index k. */
struct ChebPoly {
    std::vector<Integer> coeffs;

    long long degree() const { return static_cast<long long>(coeffs.size()) - 1; }
    Integer coeff(long long k) const {
        return (k < 0 || k > degree()) ? Integer(0) : coeffs[static_cast<size_t>(k)];
    }
    friend bool operator==(const ChebPoly& a, const ChebPoly& b) { return a.coeffs == b.coeffs; }
};

/* T_0 = 2, T_1 = X, T_n = X*T_{n-1} - T_{n-2}. */
ChebPoly chebyshev_t(long long n);

/* Substitutes a Laurent polynomial for X. */
LaurentPoly evaluate_at_laurent(const ChebPoly& p, const LaurentPoly& x);

/* Writes the n-th power of the (p,q) curve in the symmetrized basis:
   gamma^n = sum_k c_k (kp, kq)_T with rational c_k.  Requires gcd(p,q) = 1. */
TorusElement multicurve_to_fg(long long p, long long q, long long n);

/*
   Evaluation in a solid torus glued along the boundary.

   A solid torus attached to the collar is described by two integer
   functionals on the lattice: wind counts intersections with the meridian
   class (the curve bounding a disk), twist is the unimodular complement
   (wind, twist form a basis of determinant +1).  orient is +1 when the
   solid torus sits on the outer side of the collar (elements stack toward
   it from below) and -1 on the inner side.

   The skein module of the solid torus is free on the cables of the core by
   the Chebyshev polynomials of the second kind; CableExpansion stores the
   coefficient of the cable of degree j-1 at key j >= 1.  A boundary class
   with invariants (a, b) = (wind, twist) acts by

       (a,b)_T . v_j = (-1)^b [ A^{o(ab+2bj)} v_{j+a} + A^{o(ab-2bj)} v_{j-a} ]

   with o = orient and the reflection rules v_0 = 0, v_{-m} = -v_m.  The
   empty solid torus is v_1, and cable_evaluate pushes a boundary element
   onto it.  cable_section returns a boundary element supported on parallel
   copies of the core-parallel class with the same image, via
   S_{j-1} = T_{j-1} + T_{j-3} + ... ; it is a section of cable_evaluate.
*/
struct CableFrame {
    long long wind_x = 0, wind_y = 0;
    long long twist_x = 0, twist_y = 0;
    int orient = +1;

    long long wind(long long x, long long y) const { return wind_x * x + wind_y * y; }
    long long twist(long long x, long long y) const { return twist_x * x + twist_y * y; }
    long long wind(const PairClass& c) const { return wind(c.x, c.y); }
    long long twist(const PairClass& c) const { return twist(c.x, c.y); }
    /* The class with wind = 1, twist = 0 (a core-parallel curve). */
    PairClass core_parallel() const { return PairClass::of(twist_y, -twist_x); }
};

using CableExpansion = std::map<long long, LaurentPoly>;

/* Action of the boundary class with invariants (wind, twist) = (a, b). */
CableExpansion cable_act(const CableFrame& f, long long a, long long b, const CableExpansion& in);

/* Image of a boundary element pushed into the solid torus (action on v_1). */
CableExpansion cable_evaluate(const CableFrame& f, const TorusElement& u);

/* Boundary element with the same image, supported on multiples of the
   core-parallel class and the origin. */
TorusElement cable_section(const CableFrame& f, const CableExpansion& v);

}  // namespace skein
