/*
   exterior.hpp -- peripheral presentations of knot exteriors.

   Input data:  a finite set of module generators f, one boundary-algebra
   annihilator element z_f per generator (z_f * f = 0), and optional extra
   linear relations between the generators.  The Newton polygon of each
   annihilator is centrally symmetric, and the localization that makes the
   whole theory work inverts the product U of the boundary coefficients of
   those polygons.
*/

#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skein/slope.hpp"
#include "skein/torus.hpp"

namespace skein {

struct LatticePoint {
    long long x = 0;
    long long y = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

/* Convex hull of a centrally symmetric support, possibly degenerate. */
struct Polygon {
    /* Counterclockwise, starting at the lexicographically smallest vertex.
       A segment has two vertices, a single point one. */
    std::vector<LatticePoint> vertices;
    /* Primitive edge directions up to sign, canonicalized like PairClass. */
    std::set<PairClass> edge_slopes;

    bool is_point() const { return vertices.size() == 1; }
    bool is_segment() const { return vertices.size() == 2; }

    std::vector<LatticePoint> boundary_lattice_points() const;
    std::set<PairClass> boundary_classes() const;
};

struct AnnihilatorRelation {
    std::string generator;
    TorusElement element;
};

/* One term of an extra relation row: coefficient element acting on a generator. */
struct ExtraTerm {
    std::string generator;
    TorusElement element;
};
using ExtraRelation = std::vector<ExtraTerm>;

struct ExteriorPresentation {
    std::vector<std::string> generators;
    /* Parallel to generators: annihilators[i].generator == generators[i]. */
    std::vector<AnnihilatorRelation> annihilators;
    std::vector<ExtraRelation> extra_relations;

    /* Checks structural invariants: distinct nonempty generator names and a
       bijection between generators and annihilators.  Throws invalid_input_error. */
    static ExteriorPresentation make(std::vector<std::string> generators,
                                     std::vector<AnnihilatorRelation> annihilators,
                                     std::vector<ExtraRelation> extra_relations);

    int generator_index(const std::string& name) const;
};

/* Newton polygon (convex hull of the full symmetric support).  Throws
   std::invalid_argument on the zero element. */
Polygon polygon_of(const TorusElement& element);

/* Semantic diagnostics, empty when the presentation is usable:
     - each annihilator element is nonzero,
     - every lattice point on its polygon boundary carries a nonzero coefficient,
     - extra relation rows are nonempty and reference declared generators
       with nonzero elements. */
std::vector<std::string> validate_presentation(const ExteriorPresentation& p);

/* Canonical associate of the product, over all generators, of the boundary
   coefficients of the annihilator polygon (one factor per sign class of
   boundary lattice points).  Requires validate_presentation(p) empty. */
LaurentPoly compute_u(const ExteriorPresentation& p);

/* Canonical associate of the product over generators of the coefficient at
   the slope-extremal boundary class: the lattice point of the polygon
   maximizing lambda(x,y) = q*x - p*y.  Requires the slope admissible (no
   polygon edge parallel to it); throws inadmissible_slope_error otherwise. */
LaurentPoly compute_u_refined(const ExteriorPresentation& p, const Slope& s);

/* Edge direction parallel to s, if any. */
std::optional<PairClass> parallel_edge(const Polygon& poly, const Slope& s);

/* Unique maximizer of lambda(x,y) = q*x - p*y over the polygon, together
   with the maximum value (>= 0 by central symmetry).  Pre: no parallel edge. */
struct SlopeExtremal {
    LatticePoint argmax;
    long long max_lambda = 0;
};
SlopeExtremal slope_extremal_point(const Polygon& poly, const Slope& s);

}  // namespace skein
