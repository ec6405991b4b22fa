/*
   oracle.hpp -- independent cross-checks.

   The quantum torus has monomials A^a X^x Y^y with the single exchange rule
   Y^q X^r = A^{2*sigma*q*r} X^r Y^q.  Symmetrized two-term elements
       E(p,q) = A^{sigma'*p*q} (X^p Y^q + X^{-p} Y^{-q})
   close under multiplication, giving a second, structurally unrelated way
   to multiply basis classes: plain exponent bookkeeping, no convolution.
   The sign pair (sigma, sigma') is calibrated against three fixed identities
   and frozen; a regression test pins the calibration.
*/

#pragma once

#include "skein/torus.hpp"

namespace skein {

inline constexpr int kQtSigma = -1;
inline constexpr int kQtSigmaPrime = -1;

/* Multiplication through the quantum torus with explicit signs; the result
   is converted back to the symmetrized basis (throws internal_error if the
   product fails to be symmetric, which signals a wrong sign choice). */
TorusElement qt_mult_with_signs(const TorusElement& a, const TorusElement& b, int sigma,
                                int sigma_prime);

/* Quantum-torus product with the frozen calibrated signs. */
TorusElement qt_mult_pairs(const TorusElement& a, const TorusElement& b);

/* Determines the unique sign pair satisfying the three calibration
   identities; throws internal_error unless exactly one pair passes. */
std::pair<int, int> calibrate_qt_signs();

/* Number of SL2(C) characters of Z/p restricted to diagonal matrices:
   residues k mod p identified with p-k, counted by direct enumeration. */
long long character_count_cyclic(long long p);

}  // namespace skein
