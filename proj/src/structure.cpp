/* structure.cpp -- Smith normal form over Q[A^{+-1}], ranks, specialization. */

#include "skein/structure.hpp"

#include <algorithm>
#include <map>

#include "skein/errors.hpp"

namespace skein {

PresentationMatrix build_presentation_matrix(const std::vector<RelationRow>& rows,
                                             const std::vector<BandKey>& columns) {
    PresentationMatrix out;
    out.columns = columns;
    std::map<BandKey, size_t> index;
    for (size_t j = 0; j < columns.size(); ++j) index.emplace(columns[j], j);
    out.entries.reserve(rows.size());
    for (const RelationRow& row : rows) {
        std::vector<LaurentPoly> dense(columns.size());
        for (const auto& [key, c] : row.row) {
            auto it = index.find(key);
            if (it == index.end())
                throw internal_error("build_presentation_matrix: row mentions a class outside the band");
            if (!c.is_polynomial())
                throw internal_error("build_presentation_matrix: row coefficient has a denominator");
            dense[it->second] = c.numerator();
        }
        out.entries.push_back(std::move(dense));
    }
    return out;
}

namespace {

struct SmithWork {
    Mat r;
    Mat left, right;
    LaurentPoly left_det = LaurentPoly::one();
    LaurentPoly right_det = LaurentPoly::one();
    bool transforms;
    size_t rows, cols;

    SmithWork(const Mat& input, bool with_transforms)
        : r(input), transforms(with_transforms), rows(input.size()),
          cols(input.empty() ? 0 : input[0].size()) {
        for (const auto& row : input)
            if (row.size() != cols) throw std::invalid_argument("smith_normal_form: ragged matrix");
        if (!transforms) return;
        left.assign(rows, std::vector<LaurentPoly>(rows));
        for (size_t i = 0; i < rows; ++i) left[i][i] = LaurentPoly::one();
        right.assign(cols, std::vector<LaurentPoly>(cols));
        for (size_t j = 0; j < cols; ++j) right[j][j] = LaurentPoly::one();
    }

    void row_swap(size_t a, size_t b) {
        if (a == b) return;
        std::swap(r[a], r[b]);
        if (transforms) {
            std::swap(left[a], left[b]);
            left_det = -left_det;
        }
    }
    void col_swap(size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < rows; ++i) std::swap(r[i][a], r[i][b]);
        if (transforms) {
            for (size_t i = 0; i < cols; ++i) std::swap(right[i][a], right[i][b]);
            right_det = -right_det;
        }
    }
    /* row a += f * row b */
    void row_addmul(size_t a, size_t b, const LaurentPoly& f) {
        if (f.is_zero()) return;
        for (size_t j = 0; j < cols; ++j) r[a][j] += f * r[b][j];
        if (transforms)
            for (size_t j = 0; j < rows; ++j) left[a][j] += f * left[b][j];
    }
    /* col a += f * col b */
    void col_addmul(size_t a, size_t b, const LaurentPoly& f) {
        if (f.is_zero()) return;
        for (size_t i = 0; i < rows; ++i) r[i][a] += f * r[i][b];
        if (transforms)
            for (size_t i = 0; i < cols; ++i) right[i][a] += f * right[i][b];
    }
    /* row a *= unit */
    void row_scale(size_t a, const LaurentPoly& unit) {
        for (size_t j = 0; j < cols; ++j) r[a][j] *= unit;
        if (transforms) {
            for (size_t j = 0; j < rows; ++j) left[a][j] *= unit;
            left_det *= unit;
        }
    }
};

}  // namespace

SmithResult smith_normal_form(const Mat& input, bool with_transforms) {
    SmithWork w(input, with_transforms);
    const size_t n = std::min(w.rows, w.cols);

    for (size_t k = 0; k < n; ++k) {
        for (;;) {
            /* Pivot: minimal span among nonzero entries of the trailing block,
               ties broken by position. */
            size_t pi = 0, pj = 0;
            bool found = false;
            long long best = 0;
            for (size_t i = k; i < w.rows; ++i) {
                for (size_t j = k; j < w.cols; ++j) {
                    if (w.r[i][j].is_zero()) continue;
                    long long s = w.r[i][j].span();
                    if (!found || s < best) {
                        found = true;
                        best = s;
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (!found) break;
            w.row_swap(k, pi);
            w.col_swap(k, pj);

            bool restart = false;
            for (size_t i = k + 1; i < w.rows && !restart; ++i) {
                if (w.r[i][k].is_zero()) continue;
                LaurentDivMod dm = laurent_divmod(w.r[i][k], w.r[k][k]);
                w.row_addmul(i, k, -dm.quot);
                if (!w.r[i][k].is_zero()) restart = true;  /* remainder has smaller span */
            }
            if (restart) continue;
            for (size_t j = k + 1; j < w.cols && !restart; ++j) {
                if (w.r[k][j].is_zero()) continue;
                LaurentDivMod dm = laurent_divmod(w.r[k][j], w.r[k][k]);
                w.col_addmul(j, k, -dm.quot);
                if (!w.r[k][j].is_zero()) restart = true;
            }
            if (restart) continue;

            /* Pivot divides the rest of the block, or pull a bad row in. */
            bool fixed = true;
            for (size_t i = k + 1; i < w.rows && fixed; ++i) {
                for (size_t j = k + 1; j < w.cols && fixed; ++j) {
                    if (!laurent_divides(w.r[k][k], w.r[i][j])) {
                        w.row_addmul(k, i, LaurentPoly::one());
                        fixed = false;
                    }
                }
            }
            if (fixed) break;
        }
        if (!w.r[k][k].is_zero()) {
            UnitNormalForm u = unit_normal_form(w.r[k][k]);
            LaurentPoly inv = LaurentPoly::monomial(-u.unit_log, 1 / u.unit_scalar);
            w.row_scale(k, inv);
        }
    }

    SmithResult out;
    out.with_transforms = with_transforms;
    out.diagonal.reserve(n);
    for (size_t k = 0; k < n; ++k) out.diagonal.push_back(w.r[k][k]);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (out.diagonal[k].is_zero() && !out.diagonal[k + 1].is_zero())
            throw internal_error("smith_normal_form: zero before nonzero on the diagonal");
        if (!out.diagonal[k].is_zero() && !out.diagonal[k + 1].is_zero() &&
            !laurent_divides(out.diagonal[k], out.diagonal[k + 1]))
            throw internal_error("smith_normal_form: divisibility chain broken");
    }
    if (with_transforms) {
        out.left = std::move(w.left);
        out.right = std::move(w.right);
        out.left_det = w.left_det;
        out.right_det = w.right_det;
        if (!out.left_det.is_unit() || !out.right_det.is_unit())
            throw internal_error("smith_normal_form: transform determinant is not a unit");
    }
    return out;
}

InvariantFactors invariant_factors_of(const SmithResult& snf, long long col_count) {
    InvariantFactors out;
    for (const LaurentPoly& d : snf.diagonal)
        if (!d.is_zero()) out.factors.push_back(d);
    out.free_rank = col_count - static_cast<long long>(out.factors.size());
    if (out.free_rank < 0) throw internal_error("invariant_factors_of: more factors than columns");
    return out;
}

InvariantFactors strip_u_units(const InvariantFactors& inv, const LaurentPoly& u) {
    if (u.is_zero()) throw std::invalid_argument("strip_u_units: U must be nonzero");
    InvariantFactors out;
    out.free_rank = inv.free_rank;
    for (const LaurentPoly& f : inv.factors) {
        LaurentPoly rest = canonical_associate(f);
        if (!u.is_unit()) {
            for (;;) {
                LaurentPoly g = laurent_gcd(rest, u);
                if (g.is_one()) break;
                rest = canonical_associate(laurent_divide_exact(rest, g));
            }
        }
        out.factors.push_back(rest);
    }
    return out;
}

long long generic_dimension(const InvariantFactors& stripped) { return stripped.free_rank; }

SpecializationProfile specialization_profile(const InvariantFactors& stripped, const LaurentPoly& u) {
    SpecializationProfile out;
    std::map<long long, long long> torsion;
    for (const LaurentPoly& f : stripped.factors) {
        if (f.is_unit()) continue;
        for (const auto& [order, mult] : cyclotomic_orders(f))
            if (order % 4 == 2) torsion[order] += mult;
    }
    for (const auto& [order, jumps] : torsion) out.torsion_orders.push_back({order, jumps});
    if (!u.is_zero() && !u.is_unit()) {
        std::vector<long long> u_orders;
        for (const auto& [order, mult] : cyclotomic_orders(u)) u_orders.push_back(order);
        out.inconclusive_orders = exceptional_order_filter(u_orders);
    }
    return out;
}

long long rank_over_fraction_field(const Mat& m) {
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<std::vector<RatFunc>> w(rows, std::vector<RatFunc>(cols));
    for (size_t i = 0; i < rows; ++i) {
        if (m[i].size() != cols) throw std::invalid_argument("rank_over_fraction_field: ragged matrix");
        for (size_t j = 0; j < cols; ++j) w[i][j] = RatFunc(m[i][j]);
    }
    size_t rank = 0;
    for (size_t j = 0; j < cols && rank < rows; ++j) {
        size_t pivot = rank;
        while (pivot < rows && w[pivot][j].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(w[rank], w[pivot]);
        for (size_t i = rank + 1; i < rows; ++i) {
            if (w[i][j].is_zero()) continue;
            RatFunc f = w[i][j] / w[rank][j];
            for (size_t jj = j; jj < cols; ++jj) w[i][jj] -= f * w[rank][jj];
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

namespace {

/* Arithmetic in Q[A]/(Phi_order): exponents first folded with A^order = 1,
   then reduced mod the (irreducible) cyclotomic polynomial. */
struct CycloField {
    long long order;
    LaurentPoly modulus;

    explicit CycloField(long long m) : order(m), modulus(cyclotomic_polynomial(m)) {}

    LaurentPoly reduce(const LaurentPoly& p) const {
        LaurentPoly folded;
        for (const auto& [e, c] : p.terms()) folded.add_term(((e % order) + order) % order, c);
        if (folded.is_zero()) return folded;
        return laurent_divmod(folded, modulus).rem;
    }

    LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) const { return reduce(a * b); }

    LaurentPoly inverse(const LaurentPoly& a) const {
        /* Extended Euclid against the modulus; gcd is a nonzero constant. */
        LaurentPoly r0 = modulus, r1 = reduce(a);
        if (r1.is_zero()) throw std::invalid_argument("CycloField: inverse of zero");
        LaurentPoly s0 = LaurentPoly::zero(), s1 = LaurentPoly::one();
        while (!r1.is_zero()) {
            LaurentDivMod dm = laurent_divmod(r0, r1);
            LaurentPoly r2 = dm.rem;
            LaurentPoly s2 = s0 - dm.quot * s1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.is_zero() || r0.span() != 0)
            throw internal_error("CycloField: element not invertible mod an irreducible modulus");
        /* s0*a = c*A^v mod modulus; fold the unit back in. */
        Rational c = r0.terms().begin()->second;
        LaurentPoly inv = s0;
        inv *= Rational(1 / c);
        return reduce(inv.shifted(-r0.valuation()));
    }
};

}  // namespace

long long corank_mod_cyclotomic(const Mat& m, long long order) {
    CycloField field(order);
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<std::vector<LaurentPoly>> w(rows, std::vector<LaurentPoly>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) w[i][j] = field.reduce(m[i][j]);
    size_t rank = 0;
    for (size_t j = 0; j < cols && rank < rows; ++j) {
        size_t pivot = rank;
        while (pivot < rows && w[pivot][j].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(w[rank], w[pivot]);
        LaurentPoly inv = field.inverse(w[rank][j]);
        for (size_t i = rank + 1; i < rows; ++i) {
            if (w[i][j].is_zero()) continue;
            LaurentPoly f = field.mul(w[i][j], inv);
            for (size_t jj = j; jj < cols; ++jj)
                w[i][jj] = field.reduce(w[i][jj] - f * w[rank][jj]);
        }
        ++rank;
    }
    return static_cast<long long>(cols) - static_cast<long long>(rank);
}

}  // namespace skein
