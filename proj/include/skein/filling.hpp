/*
   filling.hpp -- Dehn filling: band coordinates, relation instances, and
   certified rewriting into the band.

   Fix an admissible slope (p,q).  Two integer functionals coordinatize the
   lattice:  lambda(x,y) = q*x - p*y  (vanishing exactly on the slope
   direction) and  eps(x,y) = a*x + b*y  with a*p + b*q = 1, so that
   (x,y) -> (lambda, eps) is unimodular and eps(p,q) = 1.

   The band of a presentation consists of the sign classes with
   |lambda| <= M_f (the slope-extremal value of the annihilator polygon of
   the generator f) and a representative with eps in {0,1}.  Every vector
   is rewritten into the band by two kinds of moves, each recorded in a
   certificate:

     - lambda moves subtract a multiple of a translated annihilator
       instance, killing the class of largest |lambda|;
     - eps moves subtract a multiple of a surgery relation instance,
       killing the class of largest |eps| once |lambda| is within bounds.

   Every relation row handed to the linear algebra downstream carries a
   certificate expressing it as an explicit combination of primitive
   relation instances.
*/

#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skein/exterior.hpp"
#include "skein/slope.hpp"

namespace skein {

struct SlopeFunctionals {
    /* lambda(x,y) = lam_x*x + lam_y*y, eps(x,y) = eps_x*x + eps_y*y. */
    long long lam_x = 0, lam_y = 0;
    long long eps_x = 0, eps_y = 0;

    long long lambda(long long x, long long y) const { return lam_x * x + lam_y * y; }
    long long eps(long long x, long long y) const { return eps_x * x + eps_y * y; }
    long long lambda(const PairClass& c) const { return lambda(c.x, c.y); }
    long long eps(const PairClass& c) const { return eps(c.x, c.y); }
    /* Inverse of the unimodular change of coordinates. */
    LatticePoint point_at(long long lambda_value, long long eps_value) const {
        return {eps_y * lambda_value - lam_y * eps_value, -eps_x * lambda_value + lam_x * eps_value};
    }
};

/* lambda = (q, -p); eps from the minimal Bezout pair: |a| minimal with
   a*p + b*q = 1 (tie broken toward a >= 0), and (a,b) = (1,0) when q = 0. */
SlopeFunctionals slope_functionals(const Slope& s);

struct GeneratorBand {
    long long m_bound = 0;       /* max of lambda over the annihilator polygon */
    LatticePoint argmax;         /* its unique maximizer */
    PairClass argmax_class;
};

struct BandSpec {
    Slope slope;
    SlopeFunctionals fn;
    std::vector<GeneratorBand> per_generator;  /* parallel to presentation generators */
};

/* Checks every annihilator polygon against the slope; throws
   inadmissible_slope_error naming the generator and offending edge. */
BandSpec check_slope_admissible(const ExteriorPresentation& p, const Slope& s);

/* Column / support index: a sign class attached to a generator. */
struct BandKey {
    int gen = 0;
    PairClass cls;
    auto operator<=>(const BandKey&) const = default;
};

bool in_band(const BandSpec& spec, const BandKey& key);

/* Band columns ordered by (generator, lambda, eps, x, y). */
std::vector<BandKey> band_generators(const BandSpec& spec, const ExteriorPresentation& p);

/* Sparse vector over the fraction field; zero coefficients never stored. */
using SkeinVector = std::map<BandKey, RatFunc>;

struct RelationId {
    enum class Kind { annihilator, surgery, extra, filling_slide, exterior_slide };
    Kind kind = Kind::annihilator;
    int gen = 0;          /* generator index for annihilator / surgery / slides */
    int extra_index = 0;  /* row index for extra */
    PairClass cls;        /* evaluated class for the slide kinds */
    auto operator<=>(const RelationId&) const = default;
};

struct CertificateStep {
    RelationId id;
    LatticePoint translation;
    RatFunc multiplier;
};
using Certificate = std::vector<CertificateStep>;

/* A vector together with a certificate expressing it as a combination of
   primitive relation instances: row == sum multiplier * instance. */
struct RelationRow {
    SkeinVector row;
    Certificate certificate;
};

/* The primitive relation instance named by (id, translation). */
SkeinVector expand_relation_instance(const ExteriorPresentation& p, const Slope& s,
                                     const RelationId& id, const LatticePoint& translation);

/* Annihilator of generator gen translated by (mu,nu):
   row = fg_mult((mu,nu)_T, z_gen) on generator gen. */
RelationRow translate_relation(const ExteriorPresentation& p, int gen, const LatticePoint& mu_nu);

/* Surgery relation at (mu,nu) on generator gen:
   A^{p*nu-q*mu} (p+mu, q+nu)_T + (A^2 + A^{-2}) (mu,nu)_T + A^{q*mu-p*nu} (p-mu, q-nu)_T. */
RelationRow surgery_relation_at(const Slope& s, const LatticePoint& mu_nu, int gen);

/* Extra relation row extra_index translated by (mu,nu). */
RelationRow translate_extra_relation(const ExteriorPresentation& p, int extra_index,
                                     const LatticePoint& mu_nu);

/* Slide row across the filling solid torus on generator gen:
       (cls_T − cable_section(cable_evaluate(cls_T))) * (mu,nu)_T,
   sound because the cls curve, placed outermost, slides into the filling
   torus and re-emerges as parallel copies of the core-parallel class.  At
   cls = (p,q) this is exactly surgery_relation_at. */
RelationRow filling_slide_at(const Slope& s, const PairClass& cls, const LatticePoint& mu_nu, int gen);

/* The meridian certified by an annihilator of the form
   u * [ (m)_T + (A^2 + A^{-2}) * empty ] with m primitive: such a relation
   says the m curve bounds a disk on the exterior side of the generator, so
   that side is a solid torus.  Returns nothing for any other shape. */
std::optional<PairClass> compressing_meridian(const TorusElement& annihilator);

/* Mirror of filling_slide_at across a compressible exterior side:
       (mu,nu)_T * (cls_T − cable_section(cable_evaluate(cls_T))),
   with the frame of the certified meridian and inner orientation.  Only
   valid when compressing_meridian(annihilator of gen) is present. */
RelationRow exterior_slide_at(const ExteriorPresentation& p, int gen, const PairClass& cls,
                              const LatticePoint& mu_nu);

struct ReduceResult {
    SkeinVector vector;
    /* input - vector == sum multiplier * instance */
    Certificate certificate;
};

/* Rewrites v into the band.  Every step strictly decreases the
   (max-violation, count-at-max) measure; violations are asserted to vanish. */
ReduceResult reduce_to_band(const SkeinVector& v, const BandSpec& spec, const ExteriorPresentation& p);

/* Re-expands the certificate and checks input - output == combination. */
bool verify_reduction_certificate(const SkeinVector& input, const SkeinVector& output,
                                  const Certificate& cert, const ExteriorPresentation& p,
                                  const Slope& s);

/* Checks row == certified combination for a harvested relation row. */
bool verify_relation_row(const RelationRow& row, const ExteriorPresentation& p, const Slope& s);

/* Observation hook invoked after every reduce_to_band call with
   (input, output, certificate); used by the verification suites. */
using ReductionAudit = std::function<void(const SkeinVector&, const SkeinVector&, const Certificate&)>;
void set_reduction_audit(ReductionAudit audit);

/* All distinct relation rows obtained by translating every annihilator and
   emitting every surgery instance over the window
       |lambda(mu,nu)| <= max_f M_f + radius,   eps(mu,nu) in [-radius, 1+radius],
   plus every extra relation translated over the same window, plus slide
   rows translated over the same window for every class with winding in
   [-(1+radius), 1+radius] and twist in [-radius, 1+radius] measured in the
   sliding side's own frame (filling side always; exterior side when the
   annihilator certifies a compressible exterior).  Each row is reduced to
   the band, denominators cleared (by a unit of the localized ring), zero
   rows dropped, duplicates removed, sorted by column order. */
std::vector<RelationRow> harvest_relations(const ExteriorPresentation& p, const Slope& s,
                                           long long radius);

}  // namespace skein
