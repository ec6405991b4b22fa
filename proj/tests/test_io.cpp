#include <doctest.h>

#include "skein/errors.hpp"
#include "skein/io.hpp"
#include "skein/pipeline.hpp"
#include "skein/selftest.hpp"
#include "helpers.hpp"

using namespace skein;
using testutil::poly;

TEST_CASE("laurent parsing") {
    CHECK(parse_laurent("[[2,1,1],[-2,1,1]]") == poly({{2, 1}, {-2, 1}}));
    CHECK(parse_laurent("[]").is_zero());
    CHECK(parse_laurent("[[0,1,2]]") == poly({{0, 1, 2}}));
    /* zero numerators are dropped */
    CHECK(parse_laurent("[[3,0,1],[1,2,1]]") == poly({{1, 2}}));
    /* unreduced fractions are canonicalized */
    CHECK(parse_laurent("[[0,2,4]]") == poly({{0, 1, 2}}));
    /* big integers travel as strings */
    LaurentPoly big = parse_laurent("[[1,\"123456789012345678901234567890\",1]]");
    CHECK(big.coeff(1) == Rational(Integer("123456789012345678901234567890")));

    CHECK_THROWS_AS(parse_laurent("not json"), invalid_input_error);
    CHECK_THROWS_AS(parse_laurent("{\"a\":1}"), invalid_input_error);
    CHECK_THROWS_AS(parse_laurent("[[1,2]]"), invalid_input_error);
    CHECK_THROWS_AS(parse_laurent("[[0,1,0]]"), invalid_input_error);
    CHECK_THROWS_AS(parse_laurent("[[1,1,1],[1,2,1]]"), invalid_input_error); /* duplicate exponent */

    LaurentPoly p = poly({{5, -3, 7}, {0, 1}, {-4, 2}});
    CHECK(parse_laurent(laurent_to_json(p)) == p);
}

TEST_CASE("torus element parsing") {
    TorusElement e = parse_torus_element(
        R"([{"pair":[0,0],"coeff":[[2,1,2],[-2,1,2]]},{"pair":[0,1],"coeff":[[0,1,1]]}])");
    CHECK(e == unknot_presentation().annihilators[0].element);

    CHECK_THROWS_WITH_AS(parse_torus_element(R"([{"pair":[-1,2],"coeff":[[0,1,1]]}])"),
                         doctest::Contains("not canonical"), invalid_input_error);
    CHECK_THROWS_WITH_AS(
        parse_torus_element(
            R"([{"pair":[1,0],"coeff":[[0,1,1]]},{"pair":[1,0],"coeff":[[1,1,1]]}])"),
        doctest::Contains("duplicate"), invalid_input_error);
    CHECK_THROWS_AS(parse_torus_element(R"([{"pair":[1],"coeff":[]}])"), invalid_input_error);

    TorusElement rt;
    rt.add_term(3, -2, poly({{1, 1}, {0, -1, 3}}));
    rt.add_term(0, 0, poly({{-2, 5}}));
    CHECK(parse_torus_element(torus_element_to_json(rt)) == rt);
}

TEST_CASE("fixture file matches the built-in presentation") {
    ExteriorPresentation fixture = load_presentation(SKEIN_FIXTURES_DIR "/unknot.json");
    ExteriorPresentation builtin = unknot_presentation();
    CHECK(fixture.generators == builtin.generators);
    REQUIRE(fixture.annihilators.size() == 1);
    CHECK(fixture.annihilators[0].generator == builtin.annihilators[0].generator);
    CHECK(fixture.annihilators[0].element == builtin.annihilators[0].element);
    CHECK(fixture.extra_relations.empty());
    CHECK(validate_presentation(fixture).empty());
}

TEST_CASE("presentation parsing errors") {
    CHECK_THROWS_AS(load_presentation(SKEIN_FIXTURES_DIR "/no_such_file.json"), invalid_input_error);
    CHECK_THROWS_AS(parse_presentation("[]"), invalid_input_error);
    CHECK_THROWS_AS(parse_presentation("{\"generators\":[\"g\"]}"), invalid_input_error);
    /* generator/annihilator mismatch is a structural error */
    CHECK_THROWS_AS(parse_presentation(
                        R"({"generators":["g"],"annihilators":[]})"),
                    invalid_input_error);
}

TEST_CASE("slope parsing") {
    CHECK(parse_slope("2/1") == Slope{2, 1});
    CHECK(parse_slope("-2/-1") == Slope{2, 1});
    CHECK(parse_slope("0/1") == Slope{0, 1});
    CHECK(parse_slope("1/0") == Slope{1, 0});
    CHECK_THROWS_AS(parse_slope("4/2"), invalid_input_error);
    CHECK_THROWS_AS(parse_slope("2"), invalid_input_error);
    CHECK_THROWS_AS(parse_slope("a/b"), invalid_input_error);
    CHECK_THROWS_AS(parse_slope("2/1x"), invalid_input_error);
    CHECK_THROWS_AS(parse_slope("/1"), invalid_input_error);
    CHECK_THROWS_AS(parse_slope("0/0"), invalid_input_error);
}

TEST_CASE("report serialization is deterministic") {
    ExteriorPresentation unknot = unknot_presentation();
    RunConfig cfg;
    cfg.input_label = "unknot";
    FillResult a = run_fill(unknot, Slope::of(2, 1), cfg);
    FillResult b = run_fill(unknot, Slope::of(2, 1), cfg);
    CHECK(report_to_json(a.report) == report_to_json(b.report));
    CHECK(report_to_csv(a.report) == report_to_csv(b.report));

    std::string json_text = report_to_json(a.report);
    CHECK(json_text.find("\"tool\": \"skeinfill\"") != std::string::npos);
    CHECK(json_text.find("\"slope\": \"2/1\"") != std::string::npos);
    CHECK(json_text.find("\"generic_dimension\"") != std::string::npos);

    std::string csv_text = report_to_csv(a.report);
    CHECK(csv_text.rfind("slope_p,slope_q,status,band,generic_dim,torsion_orders,"
                         "inconclusive_orders,radius,stabilized\n", 0) == 0);
    CHECK(csv_text.find("2,1,ok,") != std::string::npos);
}

TEST_CASE("scan csv") {
    ExteriorPresentation unknot = unknot_presentation();
    RunConfig cfg;
    cfg.input_label = "unknot";
    std::vector<ScanRow> rows = run_scan(unknot, 0, 2, 1, 1, cfg, 1);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].p == 0);
    CHECK(rows[0].status == "excluded");
    CHECK(rows[1].p == 1);
    CHECK(rows[1].status == "ok");
    CHECK(rows[1].report.generic_dim == 1);
    CHECK(rows[2].p == 2);
    CHECK(rows[2].status == "ok");
    CHECK(rows[2].report.generic_dim == 2);

    std::string csv = scan_to_csv(rows);
    CHECK(csv.find("0,1,excluded,,,,,,\n") != std::string::npos);
    CHECK(csv.find("1,1,ok,") != std::string::npos);

    /* non-coprime pairs are skipped, not errors */
    std::vector<ScanRow> grid = run_scan(unknot, 2, 2, 2, 2, cfg, 1);
    REQUIRE(grid.size() == 1);
    CHECK(grid[0].status == "skipped_noncoprime");

    /* empty range gives a header-only table */
    CHECK(scan_to_csv(run_scan(unknot, 5, 4, 1, 1, cfg, 1)) == std::string(
              "slope_p,slope_q,status,band,generic_dim,torsion_orders,"
              "inconclusive_orders,radius,stabilized\n"));
}
