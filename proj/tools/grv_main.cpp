// Command-line front end: runs verification suites and emits convergence
// series.
//
//   grv verify <suite> [--n-max N] [--tol T] [--terms K] [--out PATH]
//   grv series <kind> --n a,b,c [--out PATH]
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
// 2 usage or configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grv/report.hpp"

namespace {

std::vector<long long> parse_n_list(const std::string& csv) {
    std::vector<long long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        long long v = std::stoll(item, &pos);
        if (pos != item.size()) {
            throw grv::InvalidOverrideError("bad n value: '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

int write_output(const std::string& body, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        throw grv::IoError("cannot open output file: " + out_path);
    }
    f << body;
    if (!f) {
        throw grv::IoError("write failed: " + out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of the contour-integration route to the Gaussian "
                 "integral and its zeta-function identities"};
    app.require_subcommand(1);

    std::string suite_name;
    std::string out_path;
    std::optional<long long> n_max;
    std::optional<double> tol;
    std::optional<int> terms;

    auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
    verify->add_option("suite", suite_name,
                       "Suite: contour, sequences, series, zeta, gaussian, all")
        ->required();
    verify->add_option("--n-max", n_max, "Largest contour index n")->envname("GRV_NMAX");
    verify->add_option("--tol", tol, "Balance tolerance override")->envname("GRV_TOL");
    verify->add_option("--terms", terms, "Term budget for the eta acceleration");
    verify->add_option("--out", out_path, "Write the report to a file instead of stdout");

    std::string kind_name;
    std::string n_csv;
    std::string series_out;
    auto* series = app.add_subcommand("series", "Emit a convergence series as CSV");
    series->add_option("kind", kind_name, "Series: seq_a, arc_limit, zeta_partial, tail_b")
        ->required();
    series->add_option("--n", n_csv, "Comma-separated ascending n values")->required();
    series->add_option("--out", series_out, "Write the CSV to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            grv::SuiteOverrides ov;
            ov.n_max = n_max;
            ov.tol = tol;
            ov.terms = terms;
            const auto report = grv::run_suite(grv::parse_suite(suite_name), ov);
            write_output(report.to_json_string(), out_path);
            return report.failed() == 0 ? 0 : 1;
        }
        const auto kind = grv::parse_series_kind(kind_name);
        const auto n_list = parse_n_list(n_csv);
        std::ostringstream csv;
        grv::emit_series(kind, n_list, csv);
        write_output(csv.str(), series_out);
        return 0;
    } catch (const grv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
