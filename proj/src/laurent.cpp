/* laurent.cpp -- Laurent polynomial arithmetic, Euclidean structure, cyclotomics. */

#include "skein/laurent.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "skein/errors.hpp"

namespace skein {

Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    Integer num, den;
    mpz_gcd(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Rational g(num, den);
    g.canonicalize();
    return abs(g);
}

LaurentPoly LaurentPoly::constant(const Rational& c) {
    LaurentPoly p;
    p.add_term(0, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(long long exp, const Rational& c) {
    LaurentPoly p;
    p.add_term(exp, c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long long LaurentPoly::degree() const {
    if (is_zero()) throw internal_error("degree of zero polynomial");
    return terms_.rbegin()->first;
}

long long LaurentPoly::valuation() const {
    if (is_zero()) throw internal_error("valuation of zero polynomial");
    return terms_.begin()->first;
}

long long LaurentPoly::span() const { return degree() - valuation(); }

Rational LaurentPoly::coeff(long long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(long long exp, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::shifted(long long k) const {
    if (k == 0) return *this;
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

static std::string rational_str(const Rational& c) { return c.get_str(); }

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            c = abs(c);
        }
        first = false;
        long long e = it->first;
        if (e == 0) {
            out << rational_str(c);
        } else {
            if (c != 1) out << rational_str(c) << "*";
            out << "A";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

UnitNormalForm unit_normal_form(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("unit_normal_form: zero has no canonical associate");
    UnitNormalForm out;
    out.unit_log = p.valuation();
    LaurentPoly shifted = p.shifted(-out.unit_log);
    out.unit_scalar = shifted.terms().rbegin()->second;
    Rational inv = 1 / out.unit_scalar;
    shifted *= inv;
    out.canonical = shifted;
    return out;
}

LaurentPoly canonical_associate(const LaurentPoly& p) { return unit_normal_form(p).canonical; }

bool associates(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return canonical_associate(a) == canonical_associate(b);
}

/* Dense long division of the valuation-aligned polynomial parts. */
LaurentDivMod laurent_divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("laurent_divmod: division by zero");
    if (a.is_zero()) return {LaurentPoly::zero(), LaurentPoly::zero()};
    const long long va = a.valuation(), vb = b.valuation();
    const long long da = a.span(), db = b.span();
    if (da < db) return {LaurentPoly::zero(), a};

    std::vector<Rational> ra(static_cast<size_t>(da) + 1, Rational(0));
    std::vector<Rational> rb(static_cast<size_t>(db) + 1, Rational(0));
    for (const auto& [e, c] : a.terms()) ra[static_cast<size_t>(e - va)] = c;
    for (const auto& [e, c] : b.terms()) rb[static_cast<size_t>(e - vb)] = c;

    const Rational& lead = rb[static_cast<size_t>(db)];
    std::vector<Rational> q(static_cast<size_t>(da - db) + 1, Rational(0));
    for (long long i = da; i >= db; --i) {
        Rational f = ra[static_cast<size_t>(i)] / lead;
        if (f == 0) continue;
        q[static_cast<size_t>(i - db)] = f;
        for (long long j = 0; j <= db; ++j) ra[static_cast<size_t>(i - db + j)] -= f * rb[static_cast<size_t>(j)];
    }

    LaurentDivMod out;
    for (long long i = 0; i <= da - db; ++i) out.quot.add_term(i + va - vb, q[static_cast<size_t>(i)]);
    for (long long i = 0; i < db; ++i) out.rem.add_term(i + va, ra[static_cast<size_t>(i)]);
    return out;
}

bool laurent_divides(const LaurentPoly& d, const LaurentPoly& a) {
    if (a.is_zero()) return true;
    if (d.is_zero()) return false;
    return laurent_divmod(a, d).rem.is_zero();
}

LaurentPoly laurent_divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentDivMod dm = laurent_divmod(a, b);
    if (!dm.rem.is_zero()) throw internal_error("laurent_divide_exact: inexact division");
    return dm.quot;
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("laurent_gcd: gcd(0, 0) undefined");
    if (a.is_zero()) return canonical_associate(b);
    if (b.is_zero()) return canonical_associate(a);
    LaurentPoly x = canonical_associate(a), y = canonical_associate(b);
    while (!y.is_zero()) {
        LaurentPoly r = laurent_divmod(x, y).rem;
        x = y;
        y = r.is_zero() ? r : canonical_associate(r);
    }
    return canonical_associate(x);
}

LaurentPoly laurent_lcm(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("laurent_lcm: zero argument");
    return canonical_associate(laurent_divide_exact(a * b, laurent_gcd(a, b)));
}

LaurentPoly laurent_pow(const LaurentPoly& p, unsigned long long n) {
    LaurentPoly out = LaurentPoly::one();
    for (unsigned long long i = 0; i < n; ++i) out *= p;
    return out;
}

Rational laurent_content(const LaurentPoly& p) {
    Rational g = 0;
    for (const auto& [e, c] : p.terms()) g = rational_gcd(g, c);
    return g;
}

long long euler_phi(long long m) {
    if (m <= 0) throw std::invalid_argument("euler_phi: positive argument required");
    long long phi = 1, n = m;
    for (long long f = 2; f * f <= n; ++f) {
        if (n % f) continue;
        phi *= f - 1;
        n /= f;
        while (n % f == 0) {
            phi *= f;
            n /= f;
        }
    }
    if (n > 1) phi *= n - 1;
    return phi;
}

namespace {
std::map<long long, LaurentPoly>& cyclo_cache() {
    static std::map<long long, LaurentPoly> cache;
    return cache;
}
std::mutex cyclo_mutex;

const LaurentPoly& cyclo_locked(long long m) {
    auto& cache = cyclo_cache();
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    LaurentPoly p = LaurentPoly::monomial(m, 1);
    p.add_term(0, -1);
    for (long long d = 1; d < m; ++d) {
        if (m % d) continue;
        p = laurent_divide_exact(p, cyclo_locked(d));
    }
    return cache.emplace(m, std::move(p)).first->second;
}
}  // namespace

const LaurentPoly& cyclotomic_polynomial(long long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    return cyclo_locked(m);
}

std::vector<std::pair<long long, int>> cyclotomic_orders(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cyclotomic_orders: zero input");
    std::vector<std::pair<long long, int>> out;
    const long long s = p.span();
    if (s == 0) return out;
    /* phi(m) <= s forces m <= 2*s^2 + 4 (phi(m) >= sqrt(m/2) for all m). */
    const long long bound = 2 * s * s + 4;
    for (long long m = 1; m <= bound; ++m) {
        if (euler_phi(m) > s) continue;
        const LaurentPoly& phi_m = cyclotomic_polynomial(m);
        int mult = 0;
        LaurentPoly rest = p;
        while (laurent_divides(phi_m, rest)) {
            rest = laurent_divide_exact(rest, phi_m);
            ++mult;
            if (rest.is_unit()) break;
        }
        if (mult > 0) out.emplace_back(m, mult);
    }
    return out;
}

std::vector<long long> exceptional_order_filter(const std::vector<long long>& orders) {
    std::vector<long long> out;
    for (long long m : orders)
        if (m % 4 == 2) out.push_back(m);
    return out;
}

RatFunc RatFunc::of(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    RatFunc out;
    if (num.is_zero()) return out;
    LaurentPoly g = laurent_gcd(num, den);
    LaurentPoly n = laurent_divide_exact(num, g);
    LaurentPoly d = laurent_divide_exact(den, g);
    UnitNormalForm u = unit_normal_form(d);
    n *= Rational(1 / u.unit_scalar);
    out.num_ = n.shifted(-u.unit_log);
    out.den_ = u.canonical;
    return out;
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    *this = of(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    *this = of(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    *this = of(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    *this = of(num_ * o.den_, den_ * o.num_);
    return *this;
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace skein
