/*
   selftest.hpp -- built-in verification suites, shared by the `selftest`
   command, the unit tests, and the acceptance runner.

   Each suite is deterministic (fixed seeds).  The corrupt_* options flip a
   known-wrong choice inside one suite; they exist as negative controls to
   prove the suites can fail.
*/

#pragma once

#include <string>
#include <vector>

#include "skein/exterior.hpp"

namespace skein {

struct SuiteResult {
    std::string name;
    bool passed = false;
    long long checks = 0;
    std::string detail;  /* first failure, empty when passed */
    double seconds = 0.0;
};

struct SelftestOptions {
    bool corrupt_qt_calibration = false;
    bool corrupt_snf_divisibility = false;
};

/* Torus products against the quantum-torus oracle on random basis pairs. */
SuiteResult suite_oracle_equivalence(long long pairs, long long max_exponent, unsigned long long seed,
                                     bool corrupt_calibration = false);
/* Associativity of the torus product on random basis triples. */
SuiteResult suite_associativity(long long triples, long long max_exponent, unsigned long long seed);
/* Chebyshev identities for all n up to max_n. */
SuiteResult suite_chebyshev(long long max_n);
/* Random Smith normal forms: transforms, determinants, chain, rank. */
SuiteResult suite_smith(long long matrices, unsigned long long seed, bool corrupt_divisibility = false);
/* Band reduction certificates on the bundled solid-torus presentation. */
SuiteResult suite_certificates(long long vectors, unsigned long long seed);

std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

/* Exterior of the unknot: one generator (the empty link) whose annihilator
   encodes that the longitude bounds a disk. */
ExteriorPresentation unknot_presentation();

}  // namespace skein
