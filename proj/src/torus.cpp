/* torus.cpp -- symmetrized torus skein algebra and Chebyshev helpers. */

#include "skein/torus.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skein {

LaurentPoly TorusElement::coeff(long long x, long long y) const {
    auto it = support_.find(PairClass::of(x, y));
    return it == support_.end() ? LaurentPoly::zero() : it->second;
}

void TorusElement::add_term(long long x, long long y, const LaurentPoly& c) {
    if (c.is_zero()) return;
    PairClass key = PairClass::of(x, y);
    auto [it, inserted] = support_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) support_.erase(it);
    }
}

TorusElement TorusElement::operator-() const {
    TorusElement out;
    for (const auto& [cls, c] : support_) out.support_.emplace(cls, -c);
    return out;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    for (const auto& [cls, c] : o.support_) add_term(cls, c);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
    for (const auto& [cls, c] : o.support_) add_term(cls, -c);
    return *this;
}

TorusElement& TorusElement::operator*=(const LaurentPoly& c) {
    if (c.is_zero()) {
        support_.clear();
        return *this;
    }
    for (auto& [cls, v] : support_) v *= c;
    return *this;
}

TorusElement& TorusElement::operator*=(const Rational& c) {
    if (c == 0) {
        support_.clear();
        return *this;
    }
    for (auto& [cls, v] : support_) v *= c;
    return *this;
}

std::string TorusElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [cls, c] : support_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")*(" << cls.x << "," << cls.y << ")";
    }
    return out.str();
}

TorusElement fg_mult(const TorusElement& a, const TorusElement& b) {
    TorusElement out;
    for (const auto& [pa, ca] : a.terms()) {
        for (const auto& [pb, cb] : b.terms()) {
            LaurentPoly c = ca * cb;
            long long d = pa.x * pb.y - pa.y * pb.x;
            out.add_term(pa.x + pb.x, pa.y + pb.y, c.shifted(d));
            out.add_term(pa.x - pb.x, pa.y - pb.y, c.shifted(-d));
        }
    }
    return out;
}

ChebPoly chebyshev_t(long long n) {
    if (n < 0) throw std::invalid_argument("chebyshev_t: index must be >= 0");
    ChebPoly t0{{Integer(2)}};
    if (n == 0) return t0;
    ChebPoly t1{{Integer(0), Integer(1)}};
    if (n == 1) return t1;
    ChebPoly prev = t0, cur = t1;
    for (long long k = 2; k <= n; ++k) {
        ChebPoly next;
        next.coeffs.assign(static_cast<size_t>(k) + 1, Integer(0));
        for (size_t i = 0; i < cur.coeffs.size(); ++i) next.coeffs[i + 1] += cur.coeffs[i];
        for (size_t i = 0; i < prev.coeffs.size(); ++i) next.coeffs[i] -= prev.coeffs[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

LaurentPoly evaluate_at_laurent(const ChebPoly& p, const LaurentPoly& x) {
    LaurentPoly out;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
        out *= x;
        out.add_term(0, Rational(*it));
    }
    return out;
}

namespace {

void cable_add(CableExpansion& out, long long j, const LaurentPoly& c) {
    if (c.is_zero() || j == 0) return;
    const bool flip = j < 0;  /* v_{-m} = -v_m */
    if (flip) j = -j;
    auto [it, inserted] = out.emplace(j, flip ? -c : c);
    if (!inserted) {
        it->second += flip ? -c : c;
        if (it->second.is_zero()) out.erase(it);
    }
}

void check_unimodular(const CableFrame& f) {
    if (f.wind_x * f.twist_y - f.wind_y * f.twist_x != 1)
        throw std::invalid_argument("cable frame: (wind, twist) must have determinant +1");
}

}  // namespace

CableExpansion cable_act(const CableFrame& f, long long a, long long b, const CableExpansion& in) {
    check_unimodular(f);
    CableExpansion out;
    const Rational sign(b % 2 == 0 ? 1 : -1);
    for (const auto& [j, c] : in) {
        cable_add(out, j + a, LaurentPoly::monomial(f.orient * (a * b + 2 * b * j), sign) * c);
        cable_add(out, j - a, LaurentPoly::monomial(f.orient * (a * b - 2 * b * j), sign) * c);
    }
    return out;
}

CableExpansion cable_evaluate(const CableFrame& f, const TorusElement& u) {
    CableExpansion acc;
    CableExpansion empty_torus;
    empty_torus.emplace(1, LaurentPoly::one());
    for (const auto& [cls, coef] : u.terms()) {
        CableExpansion v = cable_act(f, f.wind(cls), f.twist(cls), empty_torus);
        for (const auto& [j, c] : v) cable_add(acc, j, c * coef);
    }
    return acc;
}

TorusElement cable_section(const CableFrame& f, const CableExpansion& v) {
    check_unimodular(f);
    const PairClass ell = f.core_parallel();
    TorusElement out;
    for (const auto& [j, c] : v) {
        if (j < 1) throw std::invalid_argument("cable_section: expansion keys must be >= 1");
        /* S_{j-1} = T_{j-1} + T_{j-3} + ... with the degree-0 tail (1/2) T_0. */
        for (long long i = j - 1; i >= 1; i -= 2) out.add_term(i * ell.x, i * ell.y, c);
        if (j % 2 == 1) out.add_term(0, 0, c * make_rational(1, 2));
    }
    return out;
}

TorusElement multicurve_to_fg(long long p, long long q, long long n) {
    if (n < 0) throw std::invalid_argument("multicurve_to_fg: power must be >= 0");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("multicurve_to_fg: curve label must be primitive");
    /* Work with coordinates in the Chebyshev basis of the (p,q) direction:
       gamma^0 = (1/2) T_0, and X*T_0 = 2 T_1, X*T_k = T_{k+1} + T_{k-1}. */
    std::vector<Rational> c{make_rational(1, 2)};
    for (long long step = 0; step < n; ++step) {
        std::vector<Rational> next(c.size() + 1, Rational(0));
        if (c[0] != 0) next[1] += 2 * c[0];
        for (size_t k = 1; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k - 1] += c[k];
        }
        c = std::move(next);
    }
    TorusElement out;
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        long long kk = static_cast<long long>(k);
        out.add_term(kk * p, kk * q, LaurentPoly::constant(c[k]));
    }
    return out;
}

}  // namespace skein
