/* oracle.cpp -- quantum-torus product and character counting. */

#include "skein/oracle.hpp"

#include <map>
#include <set>
#include <utility>

#include "skein/errors.hpp"

namespace skein {

namespace {

using Monomials = std::map<std::pair<long long, long long>, LaurentPoly>;

void add_monomial(Monomials& m, long long x, long long y, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.emplace(std::make_pair(x, y), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

Monomials embed(const TorusElement& e, int sigma_prime) {
    Monomials out;
    for (const auto& [cls, c] : e.terms()) {
        LaurentPoly lifted = c.shifted(sigma_prime * cls.x * cls.y);
        add_monomial(out, cls.x, cls.y, lifted);
        add_monomial(out, -cls.x, -cls.y, lifted);
    }
    return out;
}

}  // namespace

TorusElement qt_mult_with_signs(const TorusElement& a, const TorusElement& b, int sigma,
                                int sigma_prime) {
    if (sigma * sigma != 1 || sigma_prime * sigma_prime != 1)
        throw std::invalid_argument("qt_mult_with_signs: signs must be +-1");
    Monomials ma = embed(a, sigma_prime), mb = embed(b, sigma_prime);

    Monomials prod;
    for (const auto& [xy1, c1] : ma) {
        for (const auto& [xy2, c2] : mb) {
            /* X^{x1} Y^{y1} X^{x2} Y^{y2} = A^{2 sigma y1 x2} X^{x1+x2} Y^{y1+y2} */
            long long twist = 2 * sigma * xy1.second * xy2.first;
            add_monomial(prod, xy1.first + xy2.first, xy1.second + xy2.second,
                         (c1 * c2).shifted(twist));
        }
    }

    TorusElement out;
    std::set<PairClass> done;
    for (const auto& [xy, c] : prod) {
        PairClass cls = PairClass::of(xy.first, xy.second);
        if (!done.insert(cls).second) continue;
        if (cls.is_origin()) {
            LaurentPoly half = c;
            half *= make_rational(1, 2);
            out.add_term(0, 0, half);
            continue;
        }
        auto mirror = prod.find(std::make_pair(-cls.x, -cls.y));
        auto direct = prod.find(std::make_pair(cls.x, cls.y));
        if (direct == prod.end() || mirror == prod.end() || direct->second != mirror->second)
            throw internal_error("qt_mult_with_signs: product is not symmetric");
        out.add_term(cls, direct->second.shifted(-sigma_prime * cls.x * cls.y));
    }
    return out;
}

TorusElement qt_mult_pairs(const TorusElement& a, const TorusElement& b) {
    return qt_mult_with_signs(a, b, kQtSigma, kQtSigmaPrime);
}

std::pair<int, int> calibrate_qt_signs() {
    struct Identity {
        TorusElement lhs_a, lhs_b, expected;
    };
    std::vector<Identity> identities;
    {
        TorusElement expected;
        expected.add_term(1, 1, LaurentPoly::power_of_a(1));
        expected.add_term(1, -1, LaurentPoly::power_of_a(-1));
        identities.push_back({TorusElement::basis(1, 0), TorusElement::basis(0, 1), expected});
    }
    {
        TorusElement expected;
        expected.add_term(4, 2, LaurentPoly::one());
        expected.add_term(0, 0, LaurentPoly::one());
        identities.push_back({TorusElement::basis(2, 1), TorusElement::basis(2, 1), expected});
    }
    {
        TorusElement expected;
        expected.add_term(3, 2, LaurentPoly::power_of_a(1));
        expected.add_term(1, 0, LaurentPoly::power_of_a(-1));
        identities.push_back({TorusElement::basis(2, 1), TorusElement::basis(1, 1), expected});
    }

    std::vector<std::pair<int, int>> passing;
    for (int sigma : {-1, 1}) {
        for (int sigma_prime : {-1, 1}) {
            bool ok = true;
            for (const Identity& id : identities) {
                try {
                    if (qt_mult_with_signs(id.lhs_a, id.lhs_b, sigma, sigma_prime) != id.expected) {
                        ok = false;
                        break;
                    }
                } catch (const internal_error&) {
                    ok = false;
                    break;
                }
            }
            if (ok) passing.emplace_back(sigma, sigma_prime);
        }
    }
    if (passing.size() != 1)
        throw internal_error("calibrate_qt_signs: calibration identities did not pin a unique sign pair");
    return passing.front();
}

long long character_count_cyclic(long long p) {
    if (p < 1) throw std::invalid_argument("character_count_cyclic: p must be >= 1");
    std::set<long long> classes;
    for (long long k = 0; k < p; ++k) classes.insert(std::min(k, (p - k) % p));
    return static_cast<long long>(classes.size());
}

}  // namespace skein
