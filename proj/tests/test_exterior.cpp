#include <doctest.h>

#include "skein/errors.hpp"
#include "skein/exterior.hpp"
#include "skein/selftest.hpp"
#include "helpers.hpp"

using namespace skein;
using testutil::poly;

namespace {

TorusElement single(long long x, long long y, const LaurentPoly& c) {
    TorusElement e;
    e.add_term(x, y, c);
    return e;
}

ExteriorPresentation one_generator(const TorusElement& annihilator) {
    return ExteriorPresentation::make({"g"}, {{"g", annihilator}}, {});
}

}  // namespace

TEST_CASE("polygon of the solid torus annihilator") {
    Polygon poly = polygon_of(unknot_presentation().annihilators[0].element);
    CHECK(poly.is_segment());
    CHECK(poly.vertices == std::vector<LatticePoint>{{0, -1}, {0, 1}});
    CHECK(poly.edge_slopes == std::set<PairClass>{PairClass{0, 1}});
    CHECK(poly.boundary_lattice_points() ==
          std::vector<LatticePoint>{{0, -1}, {0, 0}, {0, 1}});
    CHECK(poly.boundary_classes() == std::set<PairClass>{{0, 0}, {0, 1}});
}

TEST_CASE("polygon degenerate and generic hulls") {
    Polygon seg = polygon_of(single(1, 1, LaurentPoly::one()));
    CHECK(seg.is_segment());
    CHECK(seg.vertices == std::vector<LatticePoint>{{-1, -1}, {1, 1}});
    CHECK(seg.edge_slopes == std::set<PairClass>{PairClass{1, 1}});

    Polygon pt = polygon_of(single(0, 0, LaurentPoly::one()));
    CHECK(pt.is_point());
    CHECK(pt.vertices == std::vector<LatticePoint>{{0, 0}});
    CHECK(pt.edge_slopes.empty());

    TorusElement quad;
    quad.add_term(2, 0, LaurentPoly::one());
    quad.add_term(0, 1, LaurentPoly::one());
    Polygon q = polygon_of(quad);
    CHECK(q.vertices.size() == 4);
    CHECK(q.edge_slopes == std::set<PairClass>{PairClass{2, -1}, PairClass{2, 1}});

    CHECK_THROWS_AS(polygon_of(TorusElement()), std::invalid_argument);
}

TEST_CASE("polygon central symmetry") {
    TorusElement e;
    e.add_term(3, 1, LaurentPoly::one());
    e.add_term(1, -2, poly({{1, 1}}));
    e.add_term(0, 2, poly({{0, 1, 2}}));
    Polygon p = polygon_of(e);
    std::set<LatticePoint> vs(p.vertices.begin(), p.vertices.end());
    for (const LatticePoint& v : p.vertices)
        CHECK(vs.count(LatticePoint{-v.x, -v.y}) == 1);
}

TEST_CASE("validation") {
    CHECK(validate_presentation(unknot_presentation()).empty());

    /* segment hull with missing interior boundary coefficients */
    std::vector<std::string> diags = validate_presentation(one_generator(single(2, 2, LaurentPoly::one())));
    CHECK(diags.size() == 2); /* (0,0) and (1,1) on the hull carry coefficient 0 */

    /* extra relation naming an unknown generator */
    ExteriorPresentation bad = unknot_presentation();
    bad.extra_relations.push_back({ExtraTerm{"ghost", single(0, 0, LaurentPoly::one())}});
    CHECK(!validate_presentation(bad).empty());

    /* validation is pure: same diagnostics both times */
    CHECK(validate_presentation(bad) == validate_presentation(bad));
}

TEST_CASE("structural invariants of make") {
    TorusElement z = single(0, 1, LaurentPoly::one());
    CHECK_THROWS_AS(ExteriorPresentation::make({"g", "g"}, {{"g", z}, {"g", z}}, {}),
                    invalid_input_error);
    CHECK_THROWS_AS(ExteriorPresentation::make({"g"}, {{"h", z}}, {}), invalid_input_error);
    CHECK_THROWS_AS(ExteriorPresentation::make({"g"}, {{"g", z}, {"g", z}}, {}),
                    invalid_input_error);
    CHECK_THROWS_AS(ExteriorPresentation::make({""}, {{"", z}}, {}), invalid_input_error);
}

TEST_CASE("localizing polynomial") {
    CHECK(compute_u(unknot_presentation()) == poly({{4, 1}, {0, 1}}));

    TorusElement ones = single(0, 1, LaurentPoly::one());
    ones.add_term(0, 0, LaurentPoly::one());
    CHECK(compute_u(one_generator(ones)).is_one());

    TorusElement za = single(0, 1, poly({{1, 1}, {0, -1}}));
    za.add_term(0, 0, LaurentPoly::one());
    TorusElement zb = single(0, 1, poly({{1, 1}, {0, 1}}));
    zb.add_term(0, 0, LaurentPoly::one());
    ExteriorPresentation two =
        ExteriorPresentation::make({"f0", "f1"}, {{"f0", za}, {"f1", zb}}, {});
    CHECK(compute_u(two) == poly({{2, 1}, {0, -1}}));
}

TEST_CASE("slope-refined localizing polynomial") {
    ExteriorPresentation unknot = unknot_presentation();
    CHECK(compute_u_refined(unknot, Slope::of(2, 1)).is_one());
    CHECK(compute_u_refined(unknot, Slope::of(1, 1)).is_one());

    TorusElement z = single(0, 1, poly({{3, 1}, {1, -1}}));
    z.add_term(0, 0, LaurentPoly::one());
    CHECK(compute_u_refined(one_generator(z), Slope::of(2, 1)) == poly({{2, 1}, {0, -1}}));

    /* refinement divides the full product, for several admissible slopes */
    LaurentPoly u = compute_u(one_generator(z));
    for (auto [p, q] : {std::pair<long long, long long>{1, 0}, {2, 1}, {3, 1}, {5, -2}}) {
        LaurentPoly refined = compute_u_refined(one_generator(z), Slope::of(p, q));
        CHECK(laurent_divides(refined, u));
    }

    CHECK_THROWS_AS(compute_u_refined(unknot, Slope::of(0, 1)), inadmissible_slope_error);
}

TEST_CASE("parallel edge detection") {
    Polygon seg = polygon_of(unknot_presentation().annihilators[0].element);
    CHECK(parallel_edge(seg, Slope::of(0, 1)).has_value());
    CHECK(!parallel_edge(seg, Slope::of(2, 1)).has_value());

    SlopeExtremal ex = slope_extremal_point(seg, Slope::of(2, 1));
    CHECK(ex.max_lambda == 2);
    CHECK(PairClass::of(ex.argmax.x, ex.argmax.y) == PairClass{0, 1});
}
