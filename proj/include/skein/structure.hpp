/*
   structure.hpp -- linear algebra over Q[A^{+-1}] and the filling report.

   Q[A^{+-1}] is a localization of Q[A], hence a PID; Smith normal form
   exists with invertible transforms.  The module of interest lives over
   the further localization R_U = Q[A^{+-1}][1/U], so invariant factors are
   reported with their U-parts stripped: a diagonal entry d contributes the
   largest divisor of d coprime to U.

   Root-of-unity behavior: an invariant factor divisible by Phi_m, for m a
   primitive order with m = 2 mod 4, marks a jump of the specialized
   dimension at those roots of unity; orders dividing U are inconclusive
   because the localized coefficient ring collapses there.
*/

#pragma once

#include <map>
#include <string>
#include <vector>

#include "skein/filling.hpp"

namespace skein {

using Mat = std::vector<std::vector<LaurentPoly>>;

/* Dense matrix with labelled band columns. */
struct PresentationMatrix {
    std::vector<BandKey> columns;
    Mat entries;

    long long row_count() const { return static_cast<long long>(entries.size()); }
    long long col_count() const { return static_cast<long long>(columns.size()); }
};

/* Lays harvested rows out over the band columns; throws internal_error if
   a row mentions a class outside the band or a non-polynomial coefficient. */
PresentationMatrix build_presentation_matrix(const std::vector<RelationRow>& rows,
                                             const std::vector<BandKey>& columns);

/*
   left * input * right = diag(diagonal), with left and right invertible
   over Q[A^{+-1}] (their determinants are tracked and are units), diagonal
   entries canonical associates forming a divisibility chain.
*/
struct SmithResult {
    std::vector<LaurentPoly> diagonal;  /* length min(rows, cols) */
    bool with_transforms = false;
    Mat left;
    Mat right;
    LaurentPoly left_det;
    LaurentPoly right_det;
};
SmithResult smith_normal_form(const Mat& input, bool with_transforms = true);

/* Nonzero canonical invariant factors plus the count of zero diagonal
   entries padded to the column count (the free rank of the cokernel). */
struct InvariantFactors {
    std::vector<LaurentPoly> factors;
    long long free_rank = 0;

    friend bool operator==(const InvariantFactors& a, const InvariantFactors& b) {
        return a.factors == b.factors && a.free_rank == b.free_rank;
    }
};
InvariantFactors invariant_factors_of(const SmithResult& snf, long long col_count);

/* Removes from each factor its largest divisor supported on U (and the
   rational/monomial unit); the result is the invariant factor over R_U. */
InvariantFactors strip_u_units(const InvariantFactors& inv, const LaurentPoly& u);

/* Free rank of the cokernel over R_U: columns minus the number of nonzero
   invariant factors. */
long long generic_dimension(const InvariantFactors& stripped);

/* Root-of-unity profile of the U-stripped invariant factors. */
struct TorsionOrder {
    long long order = 0;  /* = 2 mod 4 */
    long long jumps = 0;  /* total multiplicity over all factors */
    friend bool operator==(const TorsionOrder& a, const TorsionOrder& b) {
        return a.order == b.order && a.jumps == b.jumps;
    }
};
struct SpecializationProfile {
    std::vector<TorsionOrder> torsion_orders;
    std::vector<long long> inconclusive_orders;  /* exceptional orders dividing U */
};
SpecializationProfile specialization_profile(const InvariantFactors& stripped, const LaurentPoly& u);

/* Rank over the fraction field Q(A) by Gaussian elimination; independent
   of the Smith routine. */
long long rank_over_fraction_field(const Mat& m);

/* Corank of the matrix over the field Q[A]/(Phi_m), i.e. the dimension of
   the specialized cokernel at a primitive m-th root of unity. */
long long corank_mod_cyclotomic(const Mat& m, long long order);

struct FillingReport {
    std::string input_label;
    Slope slope;
    long long band_size = 0;
    long long generic_dim = 0;
    InvariantFactors stripped_factors;
    LaurentPoly u;
    LaurentPoly u_refined;
    SpecializationProfile profile;
    long long radius = 0;
    bool stabilized = false;
};

}  // namespace skein
