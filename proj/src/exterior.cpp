/* exterior.cpp -- Newton polygons, presentation validation, U computation. */

#include "skein/exterior.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "skein/errors.hpp"

namespace skein {

namespace {

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/* Andrew monotone chain; collinear points collapse to segment endpoints. */
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<LatticePoint> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
    return hull;
}

PairClass primitive_direction(const LatticePoint& from, const LatticePoint& to) {
    long long dx = to.x - from.x, dy = to.y - from.y;
    long long g = std::gcd(std::llabs(dx), std::llabs(dy));
    return PairClass::of(dx / g, dy / g);
}

std::string point_str(const LatticePoint& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

std::vector<LatticePoint> Polygon::boundary_lattice_points() const {
    std::set<LatticePoint> out;
    if (vertices.size() == 1) return {vertices[0]};
    const size_t n = vertices.size();
    const size_t edges = (n == 2) ? 1 : n;
    for (size_t i = 0; i < edges; ++i) {
        const LatticePoint& a = vertices[i];
        const LatticePoint& b = vertices[(i + 1) % n];
        long long dx = b.x - a.x, dy = b.y - a.y;
        long long g = std::gcd(std::llabs(dx), std::llabs(dy));
        for (long long k = 0; k <= g; ++k) out.insert({a.x + k * (dx / g), a.y + k * (dy / g)});
    }
    return {out.begin(), out.end()};
}

std::set<PairClass> Polygon::boundary_classes() const {
    std::set<PairClass> out;
    for (const LatticePoint& p : boundary_lattice_points()) out.insert(PairClass::of(p.x, p.y));
    return out;
}

ExteriorPresentation ExteriorPresentation::make(std::vector<std::string> generators,
                                                std::vector<AnnihilatorRelation> annihilators,
                                                std::vector<ExtraRelation> extra_relations) {
    ExteriorPresentation p;
    p.generators = std::move(generators);
    p.extra_relations = std::move(extra_relations);
    if (p.generators.empty()) throw invalid_input_error("presentation has no generators");
    std::set<std::string> seen;
    for (const std::string& g : p.generators) {
        if (g.empty()) throw invalid_input_error("empty generator name");
        if (!seen.insert(g).second) throw invalid_input_error("duplicate generator name '" + g + "'");
    }
    p.annihilators.resize(p.generators.size());
    std::vector<bool> filled(p.generators.size(), false);
    for (AnnihilatorRelation& rel : annihilators) {
        int idx = p.generator_index(rel.generator);
        if (idx < 0)
            throw invalid_input_error("annihilator references unknown generator '" + rel.generator + "'");
        if (filled[static_cast<size_t>(idx)])
            throw invalid_input_error("multiple annihilators for generator '" + rel.generator + "'");
        filled[static_cast<size_t>(idx)] = true;
        p.annihilators[static_cast<size_t>(idx)] = std::move(rel);
    }
    for (size_t i = 0; i < filled.size(); ++i)
        if (!filled[i]) throw invalid_input_error("no annihilator for generator '" + p.generators[i] + "'");
    for (const ExtraRelation& row : p.extra_relations)
        for (const ExtraTerm& term : row)
            if (p.generator_index(term.generator) < 0)
                throw invalid_input_error("extra relation references unknown generator '" + term.generator + "'");
    return p;
}

int ExteriorPresentation::generator_index(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return static_cast<int>(i);
    return -1;
}

Polygon polygon_of(const TorusElement& element) {
    if (element.is_zero()) throw std::invalid_argument("polygon_of: zero element has no polygon");
    std::vector<LatticePoint> pts;
    for (const auto& [cls, c] : element.terms()) {
        pts.push_back({cls.x, cls.y});
        pts.push_back({-cls.x, -cls.y});
    }
    Polygon poly;
    poly.vertices = convex_hull(std::move(pts));
    const size_t n = poly.vertices.size();
    if (n == 2) {
        poly.edge_slopes.insert(primitive_direction(poly.vertices[0], poly.vertices[1]));
    } else if (n >= 3) {
        for (size_t i = 0; i < n; ++i)
            poly.edge_slopes.insert(primitive_direction(poly.vertices[i], poly.vertices[(i + 1) % n]));
    }
    return poly;
}

std::vector<std::string> validate_presentation(const ExteriorPresentation& p) {
    std::vector<std::string> out;
    for (size_t i = 0; i < p.generators.size(); ++i) {
        const std::string& name = p.generators[i];
        const TorusElement& z = p.annihilators[i].element;
        if (z.is_zero()) {
            out.push_back("annihilator for generator '" + name + "' is zero");
            continue;
        }
        Polygon poly = polygon_of(z);
        for (const PairClass& cls : poly.boundary_classes()) {
            if (z.coeff(cls.x, cls.y).is_zero())
                out.push_back("annihilator for generator '" + name + "': boundary lattice point " +
                              point_str({cls.x, cls.y}) + " of its polygon has coefficient 0");
        }
    }
    for (size_t j = 0; j < p.extra_relations.size(); ++j) {
        const ExtraRelation& row = p.extra_relations[j];
        const std::string label = "extra relation " + std::to_string(j);
        if (row.empty()) out.push_back(label + " is empty");
        for (const ExtraTerm& term : row) {
            if (p.generator_index(term.generator) < 0)
                out.push_back(label + " references unknown generator '" + term.generator + "'");
            if (term.element.is_zero())
                out.push_back(label + " has a zero coefficient element on generator '" + term.generator + "'");
        }
    }
    return out;
}

LaurentPoly compute_u(const ExteriorPresentation& p) {
    std::vector<std::string> diag = validate_presentation(p);
    if (!diag.empty()) {
        std::ostringstream msg;
        msg << "compute_u: presentation invalid:";
        for (const std::string& d : diag) msg << "\n  " << d;
        throw invalid_input_error(msg.str());
    }
    LaurentPoly u = LaurentPoly::one();
    for (size_t i = 0; i < p.generators.size(); ++i) {
        const TorusElement& z = p.annihilators[i].element;
        Polygon poly = polygon_of(z);
        for (const PairClass& cls : poly.boundary_classes()) u *= z.coeff(cls.x, cls.y);
    }
    return canonical_associate(u);
}

std::optional<PairClass> parallel_edge(const Polygon& poly, const Slope& s) {
    PairClass dir = PairClass::of(s.p, s.q);
    if (poly.edge_slopes.count(dir)) return dir;
    return std::nullopt;
}

SlopeExtremal slope_extremal_point(const Polygon& poly, const Slope& s) {
    if (parallel_edge(poly, s))
        throw internal_error("slope_extremal_point: slope parallel to a polygon edge");
    auto lambda = [&s](const LatticePoint& pt) { return s.q * pt.x - s.p * pt.y; };
    SlopeExtremal best{poly.vertices.front(), lambda(poly.vertices.front())};
    bool tie = false;
    for (size_t i = 1; i < poly.vertices.size(); ++i) {
        long long v = lambda(poly.vertices[i]);
        if (v > best.max_lambda) {
            best = {poly.vertices[i], v};
            tie = false;
        } else if (v == best.max_lambda) {
            tie = true;
        }
    }
    if (tie) throw internal_error("slope_extremal_point: non-unique maximizer without parallel edge");
    return best;
}

LaurentPoly compute_u_refined(const ExteriorPresentation& p, const Slope& s) {
    LaurentPoly u = LaurentPoly::one();
    for (size_t i = 0; i < p.generators.size(); ++i) {
        const TorusElement& z = p.annihilators[i].element;
        if (z.is_zero()) throw invalid_input_error("annihilator for generator '" + p.generators[i] + "' is zero");
        Polygon poly = polygon_of(z);
        if (auto edge = parallel_edge(poly, s))
            throw inadmissible_slope_error("slope " + s.to_string() +
                                           " is parallel to an edge of the annihilator polygon for generator '" +
                                           p.generators[i] + "' (edge direction (" + std::to_string(edge->x) +
                                           "," + std::to_string(edge->y) + "))");
        SlopeExtremal ext = slope_extremal_point(poly, s);
        u *= z.coeff(ext.argmax.x, ext.argmax.y);
    }
    return canonical_associate(u);
}

}  // namespace skein
