/* slope.hpp -- primitive surgery directions on the boundary torus. */

#pragma once

#include <compare>
#include <string>

namespace skein {

/* Primitive pair (p,q) up to sign; canonical representative has p > 0,
   or p = 0 and q > 0.  Filling along (p,q) makes the (p,q) boundary curve
   bound a disk. */
struct Slope {
    long long p = 1;
    long long q = 0;

    /* Throws invalid_input_error unless gcd(p,q) = 1. */
    static Slope of(long long p, long long q);

    std::string to_string() const { return std::to_string(p) + "/" + std::to_string(q); }
    auto operator<=>(const Slope&) const = default;
};

}  // namespace skein
