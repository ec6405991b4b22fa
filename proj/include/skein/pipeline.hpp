/*
   pipeline.hpp -- the end-to-end computation behind the command line.

   For one slope: validate, check admissibility, enumerate the band, then
   harvest + Smith-reduce at increasing radius until the U-stripped
   invariant factors repeat on two consecutive radii (stabilization) or the
   radius cap is reached.  Every row of every harvest carries a certificate,
   so each reported presentation is a proven quotient of the true module:
   reported dimensions can only overshoot, never undershoot, and they are
   non-increasing in the radius.
*/

#pragma once

#include <string>
#include <vector>

#include "skein/io.hpp"
#include "skein/structure.hpp"

namespace skein {

struct RunConfig {
    long long initial_radius = 0;
    long long max_radius = 8;
    std::string input_label;
};

struct RadiusStep {
    long long radius = 0;
    long long generic_dim = 0;
    InvariantFactors stripped;
    long long row_count = 0;
};

struct FillResult {
    FillingReport report;
    PresentationMatrix matrix;  /* at the reported radius */
    std::vector<RadiusStep> history;
};

FillResult run_fill(const ExteriorPresentation& p, const Slope& s, const RunConfig& cfg);

/* One row per (p,q) pair in the rectangle, ordered by (p, q); non-coprime
   pairs and inadmissible slopes become non-"ok" rows instead of errors. */
std::vector<ScanRow> run_scan(const ExteriorPresentation& pres, long long p_lo, long long p_hi,
                              long long q_lo, long long q_hi, const RunConfig& cfg,
                              unsigned concurrency = 0);

}  // namespace skein
