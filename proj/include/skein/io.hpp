/*
   io.hpp -- file formats.

   Laurent polynomials travel as arrays of [exponent, numerator, denominator]
   triples (numbers, or strings when they exceed 64 bits).  Torus elements
   are arrays of {"pair": [x, y], "coeff": <triples>} with canonical pairs
   required.  A presentation file is
       {"generators": [...],
        "annihilators": [{"generator": ..., "element": ...}, ...],
        "extra_relations": [[{"generator": ..., "element": ...}, ...], ...]}
   with extra_relations optional.  Reports serialize deterministically.
*/

#pragma once

#include <string>
#include <vector>

#include "skein/exterior.hpp"
#include "skein/structure.hpp"

namespace skein {

/* Throws invalid_input_error on malformed input. */
LaurentPoly parse_laurent(const std::string& json_text);
TorusElement parse_torus_element(const std::string& json_text);
ExteriorPresentation parse_presentation(const std::string& json_text);
ExteriorPresentation load_presentation(const std::string& path);

std::string laurent_to_json(const LaurentPoly& p);
std::string torus_element_to_json(const TorusElement& e);

/* Row of a scan table; fill reports reuse it with status "ok". */
struct ScanRow {
    long long p = 0;
    long long q = 0;
    std::string status;  /* "ok", "excluded", "skipped_noncoprime" */
    std::string detail;  /* diagnostic for non-ok rows */
    FillingReport report;
};

std::string report_to_json(const FillingReport& report);
std::string report_to_csv(const FillingReport& report);
std::string scan_to_csv(const std::vector<ScanRow>& rows);

/* "p/q" with both parts integers. */
Slope parse_slope(const std::string& text);

}  // namespace skein
