/* pipeline.cpp -- fill / scan drivers. */

#include "skein/pipeline.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>
#include <thread>

#include "skein/errors.hpp"

namespace skein {

FillResult run_fill(const ExteriorPresentation& p, const Slope& s, const RunConfig& cfg) {
    if (cfg.initial_radius < 0) throw invalid_input_error("radius must be >= 0");
    if (cfg.max_radius < cfg.initial_radius)
        throw invalid_input_error("max radius must be >= initial radius");
    std::vector<std::string> diag = validate_presentation(p);
    if (!diag.empty()) {
        std::ostringstream msg;
        msg << "invalid presentation:";
        for (const std::string& d : diag) msg << "\n  " << d;
        throw invalid_input_error(msg.str());
    }

    BandSpec spec = check_slope_admissible(p, s);
    std::vector<BandKey> columns = band_generators(spec, p);
    const LaurentPoly u = compute_u(p);
    const LaurentPoly u_refined = compute_u_refined(p, s);

    FillResult out;
    out.report.input_label = cfg.input_label;
    out.report.slope = s;
    out.report.band_size = static_cast<long long>(columns.size());
    out.report.u = u;
    out.report.u_refined = u_refined;
    out.report.stabilized = false;

    for (long long radius = cfg.initial_radius; radius <= cfg.max_radius; ++radius) {
        std::vector<RelationRow> rows = harvest_relations(p, s, radius);
        PresentationMatrix matrix = build_presentation_matrix(rows, columns);
        SmithResult snf = smith_normal_form(matrix.entries, /*with_transforms=*/false);
        InvariantFactors stripped = strip_u_units(invariant_factors_of(snf, matrix.col_count()), u);

        RadiusStep step;
        step.radius = radius;
        step.generic_dim = generic_dimension(stripped);
        step.stripped = stripped;
        step.row_count = matrix.row_count();
        bool stable = !out.history.empty() && out.history.back().stripped == stripped;
        out.history.push_back(step);
        out.matrix = std::move(matrix);
        out.report.radius = radius;
        out.report.generic_dim = step.generic_dim;
        out.report.stripped_factors = stripped;
        if (stable) {
            out.report.stabilized = true;
            break;
        }
    }
    out.report.profile = specialization_profile(out.report.stripped_factors, u);
    return out;
}

std::vector<ScanRow> run_scan(const ExteriorPresentation& pres, long long p_lo, long long p_hi,
                              long long q_lo, long long q_hi, const RunConfig& cfg,
                              unsigned concurrency) {
    std::vector<std::pair<long long, long long>> grid;
    for (long long p = p_lo; p <= p_hi; ++p)
        for (long long q = q_lo; q <= q_hi; ++q) grid.emplace_back(p, q);

    std::vector<ScanRow> rows(grid.size());
    auto work = [&](size_t i) {
        ScanRow& row = rows[i];
        row.p = grid[i].first;
        row.q = grid[i].second;
        if (std::gcd(std::llabs(row.p), std::llabs(row.q)) != 1) {
            row.status = "skipped_noncoprime";
            row.detail = "not a slope: gcd(p, q) != 1";
            return;
        }
        try {
            row.report = run_fill(pres, Slope::of(row.p, row.q), cfg).report;
            row.status = "ok";
        } catch (const inadmissible_slope_error& e) {
            row.status = "excluded";
            row.detail = e.what();
        }
    };

    unsigned workers = concurrency ? concurrency : std::thread::hardware_concurrency();
    if (workers <= 1 || grid.size() <= 1) {
        for (size_t i = 0; i < grid.size(); ++i) work(i);
        return rows;
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(grid.size()));
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w]() {
            for (size_t i = w; i < grid.size(); i += workers) work(i);
        }));
    }
    for (auto& f : futures) f.get();
    return rows;
}

}  // namespace skein
