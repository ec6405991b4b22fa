/* skeinfill.cpp -- command line driver: fill, scan, selftest. */

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "skein/errors.hpp"
#include "skein/pipeline.hpp"
#include "skein/selftest.hpp"

namespace {

struct RangeSpec {
    long long lo = 0;
    long long hi = -1;
};

RangeSpec parse_range(const std::string& text) {
    size_t dots = text.find("..");
    if (dots == std::string::npos)
        throw skein::invalid_input_error("range must be given as a..b");
    try {
        size_t used = 0;
        std::string lo_text = text.substr(0, dots), hi_text = text.substr(dots + 2);
        RangeSpec out;
        out.lo = std::stoll(lo_text, &used);
        if (used != lo_text.size()) throw std::invalid_argument("");
        out.hi = std::stoll(hi_text, &used);
        if (used != hi_text.size()) throw std::invalid_argument("");
        return out;
    } catch (const std::invalid_argument&) {
        throw skein::invalid_input_error("range must be given as a..b with integer bounds");
    } catch (const std::out_of_range&) {
        throw skein::invalid_input_error("range bounds out of range");
    }
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw skein::invalid_input_error("cannot open output file '" + path + "'");
    out << text;
    if (!out) throw skein::invalid_input_error("failed writing output file '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skeinfill: finite presentations of Kauffman bracket skein modules of Dehn fillings"};
    app.require_subcommand(1);

    std::string input_path, slope_text, out_path, format = "json";
    long long radius = 0, max_radius = 8;

    CLI::App* fill = app.add_subcommand("fill", "compute the skein module of one Dehn filling");
    fill->add_option("--input", input_path, "presentation JSON file")->required();
    fill->add_option("--slope", slope_text, "surgery slope p/q")->required();
    fill->add_option("--radius", radius, "initial harvest radius")->capture_default_str();
    fill->add_option("--max-radius", max_radius, "radius cap for stabilization")->capture_default_str();
    fill->add_option("--out", out_path, "output file (default: stdout)");
    fill->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    std::string p_range_text, q_range_text;
    unsigned jobs = 0;
    CLI::App* scan = app.add_subcommand("scan", "tabulate fillings over a slope rectangle (CSV)");
    scan->add_option("--input", input_path, "presentation JSON file")->required();
    scan->add_option("--p-range", p_range_text, "p values a..b")->required();
    scan->add_option("--q-range", q_range_text, "q values c..d")->required();
    scan->add_option("--radius", radius, "initial harvest radius")->capture_default_str();
    scan->add_option("--max-radius", max_radius, "radius cap for stabilization")->capture_default_str();
    scan->add_option("--out", out_path, "output file (default: stdout)");
    scan->add_option("--jobs", jobs, "worker threads (0 = hardware)")->capture_default_str();

    skein::SelftestOptions selftest_options;
    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in verification suites");
    selftest->add_flag("--corrupt-qt-calibration", selftest_options.corrupt_qt_calibration)->group("");
    selftest->add_flag("--corrupt-snf-divisibility", selftest_options.corrupt_snf_divisibility)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (fill->parsed()) {
            skein::ExteriorPresentation pres = skein::load_presentation(input_path);
            skein::Slope slope = skein::parse_slope(slope_text);
            skein::RunConfig cfg;
            cfg.initial_radius = radius;
            cfg.max_radius = max_radius;
            cfg.input_label = input_path;
            skein::FillResult result = skein::run_fill(pres, slope, cfg);
            write_output(out_path, format == "json" ? skein::report_to_json(result.report)
                                                    : skein::report_to_csv(result.report));
            return 0;
        }
        if (scan->parsed()) {
            skein::ExteriorPresentation pres = skein::load_presentation(input_path);
            RangeSpec pr = parse_range(p_range_text), qr = parse_range(q_range_text);
            skein::RunConfig cfg;
            cfg.initial_radius = radius;
            cfg.max_radius = max_radius;
            cfg.input_label = input_path;
            std::vector<skein::ScanRow> rows =
                skein::run_scan(pres, pr.lo, pr.hi, qr.lo, qr.hi, cfg, jobs);
            write_output(out_path, skein::scan_to_csv(rows));
            return 0;
        }
        bool all_passed = true;
        for (const skein::SuiteResult& r : skein::run_selftest(selftest_options)) {
            if (r.passed) {
                std::printf("ok    %-20s %6lld checks  %.2fs\n", r.name.c_str(), r.checks, r.seconds);
            } else {
                all_passed = false;
                std::printf("FAIL  %-20s %s\n", r.name.c_str(), r.detail.c_str());
            }
        }
        return all_passed ? 0 : 1;
    } catch (const skein::inadmissible_slope_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const skein::invalid_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
