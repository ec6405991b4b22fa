/* io.cpp -- JSON / CSV serialization. */

#include "skein/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "skein/errors.hpp"

namespace skein {

using json = nlohmann::ordered_json;

namespace {

Integer integer_from(const json& v, const char* what) {
    if (v.is_number_integer()) return Integer(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        try {
            return Integer(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw invalid_input_error(std::string(what) + ": malformed integer string");
        }
    }
    throw invalid_input_error(std::string(what) + ": expected an integer");
}

json integer_to(const Integer& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

LaurentPoly laurent_from(const json& v) {
    if (!v.is_array()) throw invalid_input_error("coefficient: expected an array of triples");
    LaurentPoly out;
    std::set<long long> seen_exponents;
    for (const json& triple : v) {
        if (!triple.is_array() || triple.size() != 3)
            throw invalid_input_error("coefficient: each term must be [exponent, numerator, denominator]");
        Integer exp = integer_from(triple[0], "coefficient exponent");
        if (!exp.fits_slong_p()) throw invalid_input_error("coefficient exponent out of range");
        Integer num = integer_from(triple[1], "coefficient numerator");
        Integer den = integer_from(triple[2], "coefficient denominator");
        if (den == 0) throw invalid_input_error("coefficient denominator is zero");
        long long e = exp.get_si();
        if (seen_exponents.count(e))
            throw invalid_input_error("coefficient: duplicate exponent " + std::to_string(e));
        seen_exponents.insert(e);
        if (num == 0) continue;
        Rational c(num, den);
        c.canonicalize();
        out.add_term(e, c);
    }
    return out;
}

json laurent_to(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(json::array({json(e), integer_to(c.get_num()), integer_to(c.get_den())}));
    return out;
}

TorusElement torus_from(const json& v) {
    if (!v.is_array()) throw invalid_input_error("element: expected an array of terms");
    TorusElement out;
    std::set<PairClass> seen;
    for (const json& term : v) {
        if (!term.is_object() || !term.contains("pair") || !term.contains("coeff"))
            throw invalid_input_error("element term must have 'pair' and 'coeff'");
        const json& pair = term["pair"];
        if (!pair.is_array() || pair.size() != 2)
            throw invalid_input_error("element pair must be [x, y]");
        Integer xi = integer_from(pair[0], "pair x"), yi = integer_from(pair[1], "pair y");
        if (!xi.fits_slong_p() || !yi.fits_slong_p())
            throw invalid_input_error("element pair out of range");
        long long x = xi.get_si(), y = yi.get_si();
        PairClass canonical = PairClass::of(x, y);
        if (canonical.x != x || canonical.y != y)
            throw invalid_input_error("element pair [" + std::to_string(x) + "," + std::to_string(y) +
                                      "] is not canonical (expected [" + std::to_string(canonical.x) +
                                      "," + std::to_string(canonical.y) + "])");
        if (!seen.insert(canonical).second)
            throw invalid_input_error("element has a duplicate pair [" + std::to_string(x) + "," +
                                      std::to_string(y) + "]");
        out.add_term(x, y, laurent_from(term["coeff"]));
    }
    return out;
}

json torus_to(const TorusElement& e) {
    json out = json::array();
    for (const auto& [cls, c] : e.terms()) {
        json term = json::object();
        term["pair"] = json::array({cls.x, cls.y});
        term["coeff"] = laurent_to(c);
        out.push_back(std::move(term));
    }
    return out;
}

json parse_text(const std::string& text, const char* what) {
    json v = json::parse(text, nullptr, false);
    if (v.is_discarded()) throw invalid_input_error(std::string(what) + ": malformed JSON");
    return v;
}

std::string orders_field(const std::vector<TorsionOrder>& orders) {
    std::ostringstream out;
    for (size_t i = 0; i < orders.size(); ++i) {
        if (i) out << ";";
        out << orders[i].order << ":" << orders[i].jumps;
    }
    return out.str();
}

std::string orders_field(const std::vector<long long>& orders) {
    std::ostringstream out;
    for (size_t i = 0; i < orders.size(); ++i) {
        if (i) out << ";";
        out << orders[i];
    }
    return out.str();
}

const char* kCsvHeader =
    "slope_p,slope_q,status,band,generic_dim,torsion_orders,inconclusive_orders,radius,stabilized\n";

void append_csv_row(std::ostringstream& out, const ScanRow& row) {
    out << row.p << "," << row.q << "," << row.status << ",";
    if (row.status == "ok") {
        out << row.report.band_size << "," << row.report.generic_dim << ","
            << orders_field(row.report.profile.torsion_orders) << ","
            << orders_field(row.report.profile.inconclusive_orders) << "," << row.report.radius << ","
            << (row.report.stabilized ? "true" : "false");
    } else {
        out << ",,,,,";
    }
    out << "\n";
}

}  // namespace

LaurentPoly parse_laurent(const std::string& json_text) {
    return laurent_from(parse_text(json_text, "laurent"));
}

TorusElement parse_torus_element(const std::string& json_text) {
    return torus_from(parse_text(json_text, "torus element"));
}

ExteriorPresentation parse_presentation(const std::string& json_text) {
    json v = parse_text(json_text, "presentation");
    if (!v.is_object()) throw invalid_input_error("presentation: expected a JSON object");
    if (!v.contains("generators") || !v["generators"].is_array())
        throw invalid_input_error("presentation: missing 'generators' array");
    if (!v.contains("annihilators") || !v["annihilators"].is_array())
        throw invalid_input_error("presentation: missing 'annihilators' array");

    std::vector<std::string> generators;
    for (const json& g : v["generators"]) {
        if (!g.is_string()) throw invalid_input_error("presentation: generator names must be strings");
        generators.push_back(g.get<std::string>());
    }
    std::vector<AnnihilatorRelation> annihilators;
    for (const json& a : v["annihilators"]) {
        if (!a.is_object() || !a.contains("generator") || !a.contains("element"))
            throw invalid_input_error("presentation: annihilator must have 'generator' and 'element'");
        if (!a["generator"].is_string())
            throw invalid_input_error("presentation: annihilator generator must be a string");
        annihilators.push_back({a["generator"].get<std::string>(), torus_from(a["element"])});
    }
    std::vector<ExtraRelation> extras;
    if (v.contains("extra_relations")) {
        if (!v["extra_relations"].is_array())
            throw invalid_input_error("presentation: 'extra_relations' must be an array");
        for (const json& row : v["extra_relations"]) {
            if (!row.is_array()) throw invalid_input_error("presentation: extra relation must be an array");
            ExtraRelation rel;
            for (const json& term : row) {
                if (!term.is_object() || !term.contains("generator") || !term.contains("element"))
                    throw invalid_input_error(
                        "presentation: extra relation term must have 'generator' and 'element'");
                if (!term["generator"].is_string())
                    throw invalid_input_error("presentation: extra relation generator must be a string");
                rel.push_back({term["generator"].get<std::string>(), torus_from(term["element"])});
            }
            extras.push_back(std::move(rel));
        }
    }
    return ExteriorPresentation::make(std::move(generators), std::move(annihilators), std::move(extras));
}

ExteriorPresentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

std::string laurent_to_json(const LaurentPoly& p) { return laurent_to(p).dump(); }

std::string torus_element_to_json(const TorusElement& e) { return torus_to(e).dump(); }

std::string report_to_json(const FillingReport& report) {
    json out = json::object();
    out["tool"] = "skeinfill";
    out["input"] = report.input_label;
    out["slope"] = report.slope.to_string();
    out["slope_p"] = report.slope.p;
    out["slope_q"] = report.slope.q;
    out["band"] = report.band_size;
    out["generic_dimension"] = report.generic_dim;
    json factors = json::array();
    for (const LaurentPoly& f : report.stripped_factors.factors) factors.push_back(laurent_to(f));
    out["invariant_factors"] = std::move(factors);
    out["u"] = laurent_to(report.u);
    out["u_refined"] = laurent_to(report.u_refined);
    json torsion = json::array();
    for (const TorsionOrder& t : report.profile.torsion_orders) {
        json entry = json::object();
        entry["order"] = t.order;
        entry["jumps"] = t.jumps;
        torsion.push_back(std::move(entry));
    }
    out["torsion_orders"] = std::move(torsion);
    out["inconclusive_orders"] = report.profile.inconclusive_orders;
    out["radius"] = report.radius;
    out["stabilized"] = report.stabilized;
    return out.dump(2) + "\n";
}

std::string report_to_csv(const FillingReport& report) {
    std::ostringstream out;
    out << kCsvHeader;
    ScanRow row;
    row.p = report.slope.p;
    row.q = report.slope.q;
    row.status = "ok";
    row.report = report;
    append_csv_row(out, row);
    return out.str();
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << kCsvHeader;
    for (const ScanRow& row : rows) append_csv_row(out, row);
    return out.str();
}

Slope parse_slope(const std::string& text) {
    size_t slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 >= text.size())
        throw invalid_input_error("slope must be given as p/q");
    try {
        size_t used = 0;
        long long p = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument("");
        std::string qs = text.substr(slash + 1);
        long long q = std::stoll(qs, &used);
        if (used != qs.size()) throw std::invalid_argument("");
        return Slope::of(p, q);
    } catch (const std::invalid_argument&) {
        throw invalid_input_error("slope must be given as p/q with integer parts");
    } catch (const std::out_of_range&) {
        throw invalid_input_error("slope components out of range");
    }
}

}  // namespace skein
