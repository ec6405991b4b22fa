/* filling.cpp -- band coordinates, relation instances, certified reduction. */

#include "skein/filling.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "skein/errors.hpp"

namespace skein {

Slope Slope::of(long long p, long long q) {
    if (p == 0 && q == 0) throw invalid_input_error("slope 0/0 is not a direction");
    if (std::gcd(std::llabs(p), std::llabs(q)) != 1)
        throw invalid_input_error("slope " + std::to_string(p) + "/" + std::to_string(q) +
                                  " is not primitive");
    if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
    }
    Slope s;
    s.p = p;
    s.q = q;
    return s;
}

namespace {

/* x with x*a = 1 mod m, for gcd(a, m) = 1, m >= 1. */
long long mod_inverse(long long a, long long m) {
    long long t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
    while (nr != 0) {
        long long quot = r / nr;
        std::swap(t -= quot * nt, nt);
        std::swap(r -= quot * nr, nr);
    }
    if (r != 1) throw internal_error("mod_inverse: arguments not coprime");
    return ((t % m) + m) % m;
}

}  // namespace

SlopeFunctionals slope_functionals(const Slope& s) {
    SlopeFunctionals fn;
    fn.lam_x = s.q;
    fn.lam_y = -s.p;
    if (s.q == 0) {
        fn.eps_x = 1;
        fn.eps_y = 0;
    } else {
        const long long qa = std::llabs(s.q);
        long long a = mod_inverse(((s.p % qa) + qa) % qa, qa);
        if (2 * a > qa) a -= qa;
        fn.eps_x = a;
        fn.eps_y = (1 - a * s.p) / s.q;
    }
    if (fn.lam_x * fn.eps_y - fn.lam_y * fn.eps_x != 1)
        throw internal_error("slope_functionals: coordinate change not unimodular");
    return fn;
}

BandSpec check_slope_admissible(const ExteriorPresentation& p, const Slope& s) {
    BandSpec spec;
    spec.slope = s;
    spec.fn = slope_functionals(s);
    spec.per_generator.reserve(p.generators.size());
    for (size_t i = 0; i < p.generators.size(); ++i) {
        const TorusElement& z = p.annihilators[i].element;
        if (z.is_zero())
            throw invalid_input_error("annihilator for generator '" + p.generators[i] + "' is zero");
        Polygon poly = polygon_of(z);
        if (auto edge = parallel_edge(poly, s))
            throw inadmissible_slope_error(
                "slope " + s.to_string() + " is parallel to an edge of the annihilator polygon for generator '" +
                p.generators[i] + "' (edge direction (" + std::to_string(edge->x) + "," +
                std::to_string(edge->y) + "))");
        SlopeExtremal ext = slope_extremal_point(poly, s);
        GeneratorBand band;
        band.m_bound = ext.max_lambda;
        band.argmax = ext.argmax;
        band.argmax_class = PairClass::of(ext.argmax.x, ext.argmax.y);
        spec.per_generator.push_back(band);
    }
    return spec;
}

bool in_band(const BandSpec& spec, const BandKey& key) {
    const GeneratorBand& gb = spec.per_generator[static_cast<size_t>(key.gen)];
    return std::llabs(spec.fn.lambda(key.cls)) <= gb.m_bound && std::llabs(spec.fn.eps(key.cls)) <= 1;
}

std::vector<BandKey> band_generators(const BandSpec& spec, const ExteriorPresentation& p) {
    std::vector<BandKey> out;
    for (size_t g = 0; g < p.generators.size(); ++g) {
        std::set<PairClass> classes;
        const long long m = spec.per_generator[g].m_bound;
        for (long long l = -m; l <= m; ++l) {
            for (long long e = 0; e <= 1; ++e) {
                LatticePoint pt = spec.fn.point_at(l, e);
                classes.insert(PairClass::of(pt.x, pt.y));
            }
        }
        size_t first = out.size();
        for (const PairClass& cls : classes) out.push_back({static_cast<int>(g), cls});
        std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
                  [&spec](const BandKey& a, const BandKey& b) {
                      auto ka = std::make_tuple(spec.fn.lambda(a.cls), spec.fn.eps(a.cls), a.cls.x, a.cls.y);
                      auto kb = std::make_tuple(spec.fn.lambda(b.cls), spec.fn.eps(b.cls), b.cls.x, b.cls.y);
                      return ka < kb;
                  });
    }
    return out;
}

namespace {

void add_scaled(SkeinVector& target, const SkeinVector& source, const RatFunc& mult) {
    if (mult.is_zero()) return;
    for (const auto& [key, c] : source) {
        auto [it, inserted] = target.emplace(key, c * mult);
        if (!inserted) {
            it->second += c * mult;
            if (it->second.is_zero()) target.erase(it);
        }
    }
}

void add_element(SkeinVector& target, int gen, const TorusElement& e) {
    for (const auto& [cls, c] : e.terms()) {
        BandKey key{gen, cls};
        auto [it, inserted] = target.emplace(key, RatFunc(c));
        if (!inserted) {
            it->second += RatFunc(c);
            if (it->second.is_zero()) target.erase(it);
        }
    }
}

std::mutex audit_mutex;
ReductionAudit audit_hook;

}  // namespace

RelationRow translate_relation(const ExteriorPresentation& p, int gen, const LatticePoint& mu_nu) {
    const TorusElement& z = p.annihilators[static_cast<size_t>(gen)].element;
    TorusElement translated = fg_mult(TorusElement::basis(mu_nu.x, mu_nu.y), z);
    RelationRow out;
    add_element(out.row, gen, translated);
    out.certificate.push_back({{RelationId::Kind::annihilator, gen, 0, {}}, mu_nu, RatFunc(LaurentPoly::one())});
    return out;
}

RelationRow surgery_relation_at(const Slope& s, const LatticePoint& mu_nu, int gen) {
    TorusElement e;
    const long long d = s.p * mu_nu.y - s.q * mu_nu.x;
    e.add_term(s.p + mu_nu.x, s.q + mu_nu.y, LaurentPoly::power_of_a(d));
    LaurentPoly middle = LaurentPoly::power_of_a(2);
    middle.add_term(-2, 1);
    e.add_term(mu_nu.x, mu_nu.y, middle);
    e.add_term(s.p - mu_nu.x, s.q - mu_nu.y, LaurentPoly::power_of_a(-d));
    RelationRow out;
    add_element(out.row, gen, e);
    out.certificate.push_back({{RelationId::Kind::surgery, gen, 0, {}}, mu_nu, RatFunc(LaurentPoly::one())});
    return out;
}

RelationRow translate_extra_relation(const ExteriorPresentation& p, int extra_index,
                                     const LatticePoint& mu_nu) {
    const ExtraRelation& row = p.extra_relations[static_cast<size_t>(extra_index)];
    TorusElement shift = TorusElement::basis(mu_nu.x, mu_nu.y);
    RelationRow out;
    for (const ExtraTerm& term : row) {
        int gen = p.generator_index(term.generator);
        add_element(out.row, gen, fg_mult(shift, term.element));
    }
    out.certificate.push_back({{RelationId::Kind::extra, 0, extra_index, {}}, mu_nu, RatFunc(LaurentPoly::one())});
    return out;
}

namespace {

/* cls_T minus its boundary expression after the slide through the solid
   torus described by frame: zero exactly when cls lies on the core-parallel
   direction. */
TorusElement slide_difference(const CableFrame& frame, const PairClass& cls) {
    TorusElement base = TorusElement::basis(cls.x, cls.y);
    return base - cable_section(frame, cable_evaluate(frame, base));
}

CableFrame filling_frame(const Slope& s) {
    SlopeFunctionals fn = slope_functionals(s);
    return CableFrame{fn.lam_x, fn.lam_y, fn.eps_x, fn.eps_y, +1};
}

CableFrame exterior_frame(const PairClass& meridian) {
    SlopeFunctionals fn = slope_functionals(Slope::of(meridian.x, meridian.y));
    return CableFrame{fn.lam_x, fn.lam_y, fn.eps_x, fn.eps_y, -1};
}

}  // namespace

RelationRow filling_slide_at(const Slope& s, const PairClass& cls, const LatticePoint& mu_nu, int gen) {
    TorusElement diff = slide_difference(filling_frame(s), cls);
    RelationRow out;
    add_element(out.row, gen, fg_mult(diff, TorusElement::basis(mu_nu.x, mu_nu.y)));
    out.certificate.push_back(
        {{RelationId::Kind::filling_slide, gen, 0, cls}, mu_nu, RatFunc(LaurentPoly::one())});
    return out;
}

std::optional<PairClass> compressing_meridian(const TorusElement& annihilator) {
    const auto& terms = annihilator.terms();
    if (terms.size() != 2) return std::nullopt;
    auto origin = terms.find(PairClass{0, 0});
    if (origin == terms.end()) return std::nullopt;
    for (const auto& [cls, c] : terms) {
        if (cls.is_origin()) continue;
        if (std::gcd(std::llabs(cls.x), std::llabs(cls.y)) != 1) return std::nullopt;
        LaurentPoly delta_bar = LaurentPoly::power_of_a(2);
        delta_bar.add_term(-2, 1);
        /* origin coefficient must be (A^2 + A^{-2})/2 times the class coefficient */
        if (origin->second + origin->second != c * delta_bar) return std::nullopt;
        return cls;
    }
    return std::nullopt;
}

RelationRow exterior_slide_at(const ExteriorPresentation& p, int gen, const PairClass& cls,
                              const LatticePoint& mu_nu) {
    std::optional<PairClass> meridian =
        compressing_meridian(p.annihilators[static_cast<size_t>(gen)].element);
    if (!meridian)
        throw internal_error("exterior_slide_at: annihilator does not certify a compressible exterior");
    TorusElement diff = slide_difference(exterior_frame(*meridian), cls);
    RelationRow out;
    add_element(out.row, gen, fg_mult(TorusElement::basis(mu_nu.x, mu_nu.y), diff));
    out.certificate.push_back(
        {{RelationId::Kind::exterior_slide, gen, 0, cls}, mu_nu, RatFunc(LaurentPoly::one())});
    return out;
}

SkeinVector expand_relation_instance(const ExteriorPresentation& p, const Slope& s,
                                     const RelationId& id, const LatticePoint& translation) {
    switch (id.kind) {
        case RelationId::Kind::annihilator:
            return translate_relation(p, id.gen, translation).row;
        case RelationId::Kind::surgery:
            return surgery_relation_at(s, translation, id.gen).row;
        case RelationId::Kind::extra:
            return translate_extra_relation(p, id.extra_index, translation).row;
        case RelationId::Kind::filling_slide:
            return filling_slide_at(s, id.cls, translation, id.gen).row;
        case RelationId::Kind::exterior_slide:
            return exterior_slide_at(p, id.gen, id.cls, translation).row;
    }
    throw internal_error("expand_relation_instance: unknown relation kind");
}

void set_reduction_audit(ReductionAudit audit) {
    std::lock_guard<std::mutex> lock(audit_mutex);
    audit_hook = std::move(audit);
}

namespace {

/* Violation levels: how far a class sits outside the band. */
long long lambda_excess(const BandSpec& spec, const BandKey& key) {
    long long over = std::llabs(spec.fn.lambda(key.cls)) -
                     spec.per_generator[static_cast<size_t>(key.gen)].m_bound;
    return over > 0 ? over : 0;
}

long long eps_excess(const BandSpec& spec, const BandKey& key) {
    long long e = std::llabs(spec.fn.eps(key.cls));
    return e > 1 ? e : 0;
}

/* (max level, count at max) over the vector; (0,0) when none violate. */
template <typename Level>
std::pair<long long, long long> violation_measure(const SkeinVector& v, Level level) {
    std::pair<long long, long long> out{0, 0};
    for (const auto& [key, c] : v) {
        long long l = level(key);
        if (l == 0) continue;
        if (l > out.first) out = {l, 1};
        else if (l == out.first) ++out.second;
    }
    return out;
}

template <typename Level>
const BandKey* pick_violation(const SkeinVector& v, Level level) {
    const BandKey* best = nullptr;
    long long best_level = 0;
    for (const auto& [key, c] : v) {
        long long l = level(key);
        if (l == 0) continue;
        if (!best || l > best_level || (l == best_level && *best < key)) {
            best = &key;
            best_level = l;
        }
    }
    return best;
}

}  // namespace

ReduceResult reduce_to_band(const SkeinVector& v, const BandSpec& spec, const ExteriorPresentation& p) {
    ReduceResult out;
    out.vector = v;
    for (auto it = out.vector.begin(); it != out.vector.end();)
        it = it->second.is_zero() ? out.vector.erase(it) : std::next(it);

    auto lam_level = [&spec](const BandKey& k) { return lambda_excess(spec, k); };
    auto eps_level = [&spec](const BandKey& k) { return eps_excess(spec, k); };

    /* Phase 1: kill classes with |lambda| beyond the polygon bound using
       translated annihilators anchored at the slope-extremal point. */
    while (const BandKey* head = pick_violation(out.vector, lam_level)) {
        auto before = violation_measure(out.vector, lam_level);
        const BandKey key = *head;
        const GeneratorBand& gb = spec.per_generator[static_cast<size_t>(key.gen)];
        long long lam = spec.fn.lambda(key.cls);
        LatticePoint rep = lam > 0 ? LatticePoint{key.cls.x, key.cls.y}
                                   : LatticePoint{-key.cls.x, -key.cls.y};
        LatticePoint mu_nu{rep.x - gb.argmax.x, rep.y - gb.argmax.y};
        SkeinVector inst = translate_relation(p, key.gen, mu_nu).row;
        auto hit = inst.find(key);
        if (hit == inst.end() || hit->second.is_zero())
            throw internal_error("reduce_to_band: translated annihilator misses its head class");
        RatFunc mult = out.vector.at(key) / hit->second;
        add_scaled(out.vector, inst, -mult);
        out.certificate.push_back({{RelationId::Kind::annihilator, key.gen, 0, {}}, mu_nu, mult});
        if (out.vector.count(key)) throw internal_error("reduce_to_band: head class survived lambda move");
        auto after = violation_measure(out.vector, lam_level);
        if (after >= before) throw internal_error("reduce_to_band: lambda measure failed to decrease");
    }

    /* Phase 2: shift classes with |eps| >= 2 toward the band using surgery
       relation instances; lambda values are untouched. */
    while (const BandKey* head = pick_violation(out.vector, eps_level)) {
        auto before = violation_measure(out.vector, eps_level);
        const BandKey key = *head;
        long long eps = spec.fn.eps(key.cls);
        LatticePoint rep = eps >= 2 ? LatticePoint{key.cls.x, key.cls.y}
                                    : LatticePoint{-key.cls.x, -key.cls.y};
        LatticePoint mu_nu{rep.x - spec.slope.p, rep.y - spec.slope.q};
        SkeinVector inst = surgery_relation_at(spec.slope, mu_nu, key.gen).row;
        auto hit = inst.find(key);
        if (hit == inst.end() || hit->second.is_zero())
            throw internal_error("reduce_to_band: surgery instance misses its head class");
        RatFunc mult = out.vector.at(key) / hit->second;
        add_scaled(out.vector, inst, -mult);
        out.certificate.push_back({{RelationId::Kind::surgery, key.gen, 0, {}}, mu_nu, mult});
        if (out.vector.count(key)) throw internal_error("reduce_to_band: head class survived eps move");
        if (violation_measure(out.vector, lam_level).first != 0)
            throw internal_error("reduce_to_band: eps move broke lambda bounds");
        auto after = violation_measure(out.vector, eps_level);
        if (after >= before) throw internal_error("reduce_to_band: eps measure failed to decrease");
    }

    for (const auto& [key, c] : out.vector)
        if (!in_band(spec, key)) throw internal_error("reduce_to_band: result left the band");

    ReductionAudit audit;
    {
        std::lock_guard<std::mutex> lock(audit_mutex);
        audit = audit_hook;
    }
    if (audit) audit(v, out.vector, out.certificate);
    return out;
}

bool verify_reduction_certificate(const SkeinVector& input, const SkeinVector& output,
                                  const Certificate& cert, const ExteriorPresentation& p,
                                  const Slope& s) {
    SkeinVector acc;
    for (const CertificateStep& step : cert)
        add_scaled(acc, expand_relation_instance(p, s, step.id, step.translation), step.multiplier);
    SkeinVector diff = input;
    add_scaled(diff, output, RatFunc(-LaurentPoly::one()));
    return diff == acc;
}

bool verify_relation_row(const RelationRow& row, const ExteriorPresentation& p, const Slope& s) {
    return verify_reduction_certificate(row.row, SkeinVector{}, row.certificate, p, s);
}

namespace {

bool ratfunc_less(const RatFunc& a, const RatFunc& b) {
    if (a.numerator() != b.numerator()) return a.numerator() < b.numerator();
    return a.denominator() < b.denominator();
}

bool row_less(const SkeinVector& a, const SkeinVector& b) {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ratfunc_less(ia->second, ib->second);
    }
    return ia == a.end() && ib != b.end();
}

}  // namespace

std::vector<RelationRow> harvest_relations(const ExteriorPresentation& p, const Slope& s,
                                           long long radius) {
    if (radius < 0) throw std::invalid_argument("harvest_relations: radius must be >= 0");
    BandSpec spec = check_slope_admissible(p, s);
    long long max_m = 0;
    for (const GeneratorBand& gb : spec.per_generator) max_m = std::max(max_m, gb.m_bound);
    const long long lam_window = max_m + radius;

    std::set<PairClass> seen;
    std::vector<LatticePoint> translations;
    for (long long l = -lam_window; l <= lam_window; ++l) {
        for (long long e = -radius; e <= 1 + radius; ++e) {
            LatticePoint pt = spec.fn.point_at(l, e);
            PairClass cls = PairClass::of(pt.x, pt.y);
            if (!seen.insert(cls).second) continue;
            translations.push_back({cls.x, cls.y});
        }
    }

    std::map<SkeinVector, Certificate, bool (*)(const SkeinVector&, const SkeinVector&)> rows(row_less);

    /* Band reduction rewrites one class at a time, independently of the rest
       of the vector, so it is linear: reduce each basis class once, cache the
       result, and assemble candidate reductions from the cached pieces. */
    std::map<BandKey, ReduceResult> cache;
    auto reduce_cached = [&](const SkeinVector& v) {
        ReduceResult out;
        for (const auto& [key, coeff] : v) {
            auto it = cache.find(key);
            if (it == cache.end()) {
                SkeinVector unit;
                unit.emplace(key, RatFunc(LaurentPoly::one()));
                it = cache.emplace(key, reduce_to_band(unit, spec, p)).first;
            }
            for (const auto& [k, c] : it->second.vector) {
                RatFunc& slot = out.vector[k];
                slot += c * coeff;
                if (slot.is_zero()) out.vector.erase(k);
            }
            for (const CertificateStep& step : it->second.certificate)
                out.certificate.push_back({step.id, step.translation, step.multiplier * coeff});
        }
        return out;
    };

    auto consume = [&](const RelationRow& candidate) {
        ReduceResult red = reduce_cached(candidate.row);
        if (red.vector.empty()) return;

        /* row = instance - sum m_i inst_i; merge into one certificate. */
        std::map<std::pair<RelationId, LatticePoint>, RatFunc> combo;
        for (const CertificateStep& step : candidate.certificate)
            combo[{step.id, step.translation}] += step.multiplier;
        for (const CertificateStep& step : red.certificate)
            combo[{step.id, step.translation}] -= step.multiplier;

        /* Clear denominators; the lcm divides a product of extremal
           coefficients and powers of 2, hence is a unit of the localization. */
        LaurentPoly lcm = LaurentPoly::one();
        for (const auto& [key, c] : red.vector) lcm = laurent_lcm(lcm, c.denominator());
        RatFunc scale(lcm);
        SkeinVector cleared;
        for (const auto& [key, c] : red.vector) {
            RatFunc v = c * scale;
            if (!v.is_polynomial()) throw internal_error("harvest_relations: denominator clearing failed");
            cleared.emplace(key, v);
        }
        Certificate cert;
        for (auto& [id_tr, mult] : combo) {
            RatFunc scaled = mult * scale;
            if (scaled.is_zero()) continue;
            cert.push_back({id_tr.first, id_tr.second, scaled});
        }
        rows.emplace(std::move(cleared), std::move(cert));
    };

    for (const LatticePoint& mu_nu : translations) {
        for (size_t g = 0; g < p.generators.size(); ++g) {
            consume(translate_relation(p, static_cast<int>(g), mu_nu));
            consume(surgery_relation_at(s, mu_nu, static_cast<int>(g)));
        }
        for (size_t j = 0; j < p.extra_relations.size(); ++j)
            consume(translate_extra_relation(p, static_cast<int>(j), mu_nu));
    }

    /* Slide rows: each side's slide kernel is a one-sided module over the
       torus algebra (right for the filling side, left for the exterior side),
       so low-winding slide differences generate it and the translations over
       the full window sweep the band.  Class windows are measured in each
       side's own (winding, twist) frame.  At winding 0 / twist 1 the rows
       reproduce the surgery row resp. the annihilator, so both families
       extend the classical instances. */
    auto frame_window = [&](auto point_of) {
        std::vector<PairClass> out;
        std::set<PairClass> seen_cls;
        for (long long a = -(1 + radius); a <= 1 + radius; ++a) {
            for (long long b = -radius; b <= 1 + radius; ++b) {
                PairClass cls = point_of(a, b);
                if (seen_cls.insert(cls).second) out.push_back(cls);
            }
        }
        return out;
    };
    std::vector<PairClass> filling_classes = frame_window([&](long long a, long long b) {
        LatticePoint pt = spec.fn.point_at(a, b);
        return PairClass::of(pt.x, pt.y);
    });
    for (size_t g = 0; g < p.generators.size(); ++g) {
        std::optional<PairClass> meridian = compressing_meridian(p.annihilators[g].element);
        for (const PairClass& cls : filling_classes)
            for (const LatticePoint& mu_nu : translations)
                consume(filling_slide_at(s, cls, mu_nu, static_cast<int>(g)));
        if (!meridian) continue;
        const PairClass ell = exterior_frame(*meridian).core_parallel();
        std::vector<PairClass> exterior_classes = frame_window([&](long long a, long long b) {
            return PairClass::of(a * ell.x + b * meridian->x, a * ell.y + b * meridian->y);
        });
        for (const PairClass& cls : exterior_classes)
            for (const LatticePoint& mu_nu : translations)
                consume(exterior_slide_at(p, static_cast<int>(g), cls, mu_nu));
    }

    std::vector<RelationRow> out;
    out.reserve(rows.size());
    for (auto& [row, cert] : rows) out.push_back({row, cert});
    return out;
}

}  // namespace skein
