/* helpers.hpp -- small builders shared by the test files. */

#pragma once

#include <initializer_list>
#include <random>

#include "skein/laurent.hpp"
#include "skein/torus.hpp"

namespace testutil {

struct Term {
    long long exp;
    long long num;
    long long den = 1;
};

inline skein::LaurentPoly poly(std::initializer_list<Term> terms) {
    skein::LaurentPoly p;
    for (const Term& t : terms) p.add_term(t.exp, skein::make_rational(t.num, t.den));
    return p;
}

/* A^2 + A^{-2}, the negated loop value. */
inline skein::LaurentPoly delta_bar() { return poly({{2, 1}, {-2, 1}}); }

inline skein::LaurentPoly random_poly(std::mt19937_64& rng, long long max_abs_exp = 6,
                                      int max_terms = 5) {
    std::uniform_int_distribution<long long> exp_dist(-max_abs_exp, max_abs_exp);
    std::uniform_int_distribution<long long> num_dist(-4, 4);
    std::uniform_int_distribution<long long> den_dist(1, 3);
    std::uniform_int_distribution<int> count_dist(1, max_terms);
    skein::LaurentPoly p;
    int n = count_dist(rng);
    for (int i = 0; i < n; ++i) p.add_term(exp_dist(rng), skein::make_rational(num_dist(rng), den_dist(rng)));
    return p;
}

inline skein::LaurentPoly random_nonzero_poly(std::mt19937_64& rng, long long max_abs_exp = 6,
                                              int max_terms = 5) {
    for (;;) {
        skein::LaurentPoly p = random_poly(rng, max_abs_exp, max_terms);
        if (!p.is_zero()) return p;
    }
}

}  // namespace testutil
