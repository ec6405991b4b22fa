/* selftest.cpp -- deterministic verification suites. */

#include "skein/selftest.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "skein/errors.hpp"
#include "skein/filling.hpp"
#include "skein/oracle.hpp"
#include "skein/structure.hpp"

namespace skein {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

long long uniform(std::mt19937_64& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

Mat mat_mul(const Mat& a, const Mat& b) {
    const size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    Mat out(n, std::vector<LaurentPoly>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

}  // namespace

ExteriorPresentation unknot_presentation() {
    TorusElement z;
    z.add_term(0, 1, LaurentPoly::one());
    LaurentPoly half_delta;  /* (A^2 + A^-2)/2 */
    half_delta.add_term(2, make_rational(1, 2));
    half_delta.add_term(-2, make_rational(1, 2));
    z.add_term(0, 0, half_delta);
    return ExteriorPresentation::make({"empty"}, {{"empty", z}}, {});
}

SuiteResult suite_oracle_equivalence(long long pairs, long long max_exponent, unsigned long long seed,
                                     bool corrupt_calibration) {
    SuiteResult out;
    out.name = "oracle-equivalence";
    auto start = Clock::now();
    std::mt19937_64 rng(seed);
    const int sigma = corrupt_calibration ? -kQtSigma : kQtSigma;
    out.passed = true;
    for (long long i = 0; i < pairs && out.passed; ++i) {
        TorusElement a = TorusElement::basis(uniform(rng, -max_exponent, max_exponent),
                                             uniform(rng, -max_exponent, max_exponent));
        TorusElement b = TorusElement::basis(uniform(rng, -max_exponent, max_exponent),
                                             uniform(rng, -max_exponent, max_exponent));
        TorusElement via_qt;
        try {
            via_qt = qt_mult_with_signs(a, b, sigma, kQtSigmaPrime);
        } catch (const internal_error& e) {
            out.passed = false;
            out.detail = e.what();
            break;
        }
        if (fg_mult(a, b) != via_qt) {
            out.passed = false;
            std::ostringstream msg;
            msg << "product mismatch on " << a.to_string() << " times " << b.to_string();
            out.detail = msg.str();
        }
        ++out.checks;
    }
    out.seconds = seconds_since(start);
    return out;
}

SuiteResult suite_associativity(long long triples, long long max_exponent, unsigned long long seed) {
    SuiteResult out;
    out.name = "associativity";
    auto start = Clock::now();
    std::mt19937_64 rng(seed);
    out.passed = true;
    for (long long i = 0; i < triples && out.passed; ++i) {
        TorusElement a = TorusElement::basis(uniform(rng, -max_exponent, max_exponent),
                                             uniform(rng, -max_exponent, max_exponent));
        TorusElement b = TorusElement::basis(uniform(rng, -max_exponent, max_exponent),
                                             uniform(rng, -max_exponent, max_exponent));
        TorusElement c = TorusElement::basis(uniform(rng, -max_exponent, max_exponent),
                                             uniform(rng, -max_exponent, max_exponent));
        if (fg_mult(fg_mult(a, b), c) != fg_mult(a, fg_mult(b, c))) {
            out.passed = false;
            out.detail = "associativity failed on " + a.to_string() + ", " + b.to_string() + ", " +
                         c.to_string();
        }
        ++out.checks;
    }
    out.seconds = seconds_since(start);
    return out;
}

SuiteResult suite_chebyshev(long long max_n) {
    SuiteResult out;
    out.name = "chebyshev";
    auto start = Clock::now();
    out.passed = true;
    LaurentPoly t_plus_tinv = LaurentPoly::power_of_a(1) + LaurentPoly::power_of_a(-1);
    ChebPoly prev, cur;
    for (long long n = 0; n <= max_n && out.passed; ++n) {
        ChebPoly tn = chebyshev_t(n);
        /* Recurrence against the previous two. */
        if (n >= 2) {
            ChebPoly expect;
            expect.coeffs.assign(static_cast<size_t>(n) + 1, Integer(0));
            for (size_t i = 0; i < cur.coeffs.size(); ++i) expect.coeffs[i + 1] += cur.coeffs[i];
            for (size_t i = 0; i < prev.coeffs.size(); ++i) expect.coeffs[i] -= prev.coeffs[i];
            if (!(tn == expect)) {
                out.passed = false;
                out.detail = "recurrence failed at n=" + std::to_string(n);
            }
        }
        /* Evaluation identity T_n(t + 1/t) = t^n + t^-n. */
        LaurentPoly lhs = evaluate_at_laurent(tn, t_plus_tinv);
        LaurentPoly rhs = LaurentPoly::power_of_a(n) + LaurentPoly::power_of_a(-n);
        if (lhs != rhs) {
            out.passed = false;
            out.detail = "evaluation identity failed at n=" + std::to_string(n);
        }
        /* Parity: T_n(-X) = (-1)^n T_n(X), i.e. only exponents of n's parity. */
        for (long long k = 0; k <= tn.degree() && out.passed; ++k) {
            if (tn.coeff(k) != 0 && (k - n) % 2 != 0) {
                out.passed = false;
                out.detail = "parity failed at n=" + std::to_string(n);
            }
        }
        ++out.checks;
        prev = std::move(cur);
        cur = std::move(tn);
    }
    out.seconds = seconds_since(start);
    return out;
}

namespace {

LaurentPoly random_entry(std::mt19937_64& rng) {
    if (uniform(rng, 0, 4) == 0) return LaurentPoly::zero();
    LaurentPoly p;
    long long val = uniform(rng, -2, 2);
    long long span = uniform(rng, 0, 4);
    for (long long e = val; e <= val + span; ++e) p.add_term(e, make_rational(uniform(rng, -3, 3)));
    if (p.is_zero()) p.add_term(val, 1);
    return p;
}

}  // namespace

SuiteResult suite_smith(long long matrices, unsigned long long seed, bool corrupt_divisibility) {
    SuiteResult out;
    out.name = "smith-normal-form";
    auto start = Clock::now();
    std::mt19937_64 rng(seed);
    out.passed = true;
    for (long long mcount = 0; mcount < matrices && out.passed; ++mcount) {
        Mat m(5, std::vector<LaurentPoly>(5));
        for (auto& row : m)
            for (auto& e : row) e = random_entry(rng);
        SmithResult snf = smith_normal_form(m, true);
        std::vector<LaurentPoly> diagonal = snf.diagonal;
        if (corrupt_divisibility && !diagonal.empty()) {
            LaurentPoly tweak = LaurentPoly::power_of_a(1);
            tweak.add_term(0, 1);  /* A + 1 */
            diagonal[0] += tweak;
        }

        Mat d(5, std::vector<LaurentPoly>(5));
        for (size_t k = 0; k < diagonal.size(); ++k) d[k][k] = diagonal[k];
        if (mat_mul(mat_mul(snf.left, m), snf.right) != d) {
            out.passed = false;
            out.detail = "transforms do not reproduce the diagonal (matrix " + std::to_string(mcount) + ")";
        }
        if (out.passed && (!snf.left_det.is_unit() || !snf.right_det.is_unit())) {
            out.passed = false;
            out.detail = "transform determinant not a unit";
        }
        long long nonzero = 0;
        for (size_t k = 0; k + 1 < diagonal.size() && out.passed; ++k) {
            if (diagonal[k].is_zero()) continue;
            if (!diagonal[k + 1].is_zero() && !laurent_divides(diagonal[k], diagonal[k + 1])) {
                out.passed = false;
                out.detail = "divisibility chain broken (matrix " + std::to_string(mcount) + ")";
            }
        }
        for (const LaurentPoly& f : diagonal)
            if (!f.is_zero()) ++nonzero;
        if (out.passed && nonzero != rank_over_fraction_field(m)) {
            out.passed = false;
            out.detail = "rank disagrees with fraction-field elimination (matrix " +
                         std::to_string(mcount) + ")";
        }
        ++out.checks;
    }
    out.seconds = seconds_since(start);
    return out;
}

SuiteResult suite_certificates(long long vectors, unsigned long long seed) {
    SuiteResult out;
    out.name = "certificates";
    auto start = Clock::now();
    std::mt19937_64 rng(seed);
    out.passed = true;
    ExteriorPresentation pres = unknot_presentation();
    const std::vector<Slope> slopes{Slope::of(2, 1), Slope::of(3, 1), Slope::of(5, 2)};
    for (long long i = 0; i < vectors && out.passed; ++i) {
        const Slope& s = slopes[static_cast<size_t>(i) % slopes.size()];
        BandSpec spec = check_slope_admissible(pres, s);
        SkeinVector v;
        long long terms = uniform(rng, 1, 4);
        for (long long t = 0; t < terms; ++t) {
            PairClass cls = PairClass::of(uniform(rng, -6, 6), uniform(rng, -6, 6));
            LaurentPoly c = LaurentPoly::monomial(uniform(rng, -3, 3), make_rational(uniform(rng, 1, 3)));
            BandKey key{0, cls};
            auto [it, inserted] = v.emplace(key, RatFunc(c));
            if (!inserted) it->second += RatFunc(c);
        }
        ReduceResult red = reduce_to_band(v, spec, pres);
        for (const auto& [key, c] : red.vector) {
            if (!in_band(spec, key)) {
                out.passed = false;
                out.detail = "reduced vector left the band";
            }
        }
        if (out.passed && !verify_reduction_certificate(v, red.vector, red.certificate, pres, s)) {
            out.passed = false;
            out.detail = "certificate does not reproduce input - output (vector " + std::to_string(i) + ")";
        }
        ++out.checks;
    }
    /* Harvested rows carry certificates of their own. */
    for (const Slope& s : slopes) {
        if (!out.passed) break;
        for (long long radius = 0; radius <= 1 && out.passed; ++radius) {
            for (const RelationRow& row : harvest_relations(pres, s, radius)) {
                if (!verify_relation_row(row, pres, s)) {
                    out.passed = false;
                    out.detail = "harvested row certificate failed (slope " + s.to_string() + ")";
                    break;
                }
                ++out.checks;
            }
        }
    }
    out.seconds = seconds_since(start);
    return out;
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
    std::vector<SuiteResult> out;
    out.push_back(suite_oracle_equivalence(1000, 25, 0x5eed0001ull, options.corrupt_qt_calibration));
    out.push_back(suite_associativity(200, 10, 0x5eed0002ull));
    out.push_back(suite_chebyshev(64));
    out.push_back(suite_smith(100, 0x5eed0003ull, options.corrupt_snf_divisibility));
    out.push_back(suite_certificates(42, 0x5eed0004ull));
    return out;
}

}  // namespace skein
