#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef _WIN32
#include <sys/wait.h>
#endif

#include <nlohmann/json.hpp>

#include "grv/report.hpp"
#include "reference_values.hpp"

using namespace grv;
namespace ref = grv::testref;

namespace {

nlohmann::json without_wall_times(const std::string& body) {
    auto doc = nlohmann::json::parse(body);
    for (auto& check : doc["checks"]) {
        check["wall_time"] = 0.0;
    }
    return doc;
}

std::vector<std::string> csv_lines(const std::string& body) {
    std::vector<std::string> lines;
    std::stringstream ss(body);
    std::string line;
    while (std::getline(ss, line)) {
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        cells.push_back(cell);
    }
    return cells;
}

}  // namespace

TEST_CASE("suite and kind parsing") {
    CHECK(parse_suite("gaussian") == Suite::gaussian);
    CHECK(parse_suite("all") == Suite::all);
    CHECK_THROWS_AS(parse_suite("bogus"), UnknownSuiteError);
    CHECK(parse_series_kind("tail_b") == SeriesKind::tail_b);
    CHECK_THROWS_AS(parse_series_kind("bogus"), UnknownKindError);
}

TEST_CASE("override validation") {
    SuiteOverrides bad_tol;
    bad_tol.tol = -1.0;
    CHECK_THROWS_AS(run_suite(Suite::all, bad_tol), InvalidOverrideError);

    SuiteOverrides bad_n;
    bad_n.n_max = 0;
    CHECK_THROWS_AS(run_suite(Suite::contour, bad_n), InvalidOverrideError);

    SuiteOverrides bad_terms;
    bad_terms.terms = 2;
    CHECK_THROWS_AS(run_suite(Suite::series, bad_terms), InvalidOverrideError);

    SuiteOverrides bad_y;
    bad_y.y_list = std::vector<double>{1.0, -2.0};
    CHECK_THROWS_AS(run_suite(Suite::series, bad_y), InvalidOverrideError);
}

TEST_CASE("gaussian suite: three passing checks") {
    const auto report = run_suite(Suite::gaussian);
    CHECK(report.suite == "gaussian");
    REQUIRE(report.total() == 3);
    CHECK(report.passed() == 3);
    CHECK(report.failed() == 0);
    for (const auto& c : report.checks) {
        CHECK(c.passed);
    }
}

TEST_CASE("contour suite has three checks per n") {
    SuiteOverrides ov;
    ov.n_max = 5;
    const auto report = run_suite(Suite::contour, ov);
    REQUIRE(report.total() == 15);
    CHECK(report.failed() == 0);
    CHECK(report.checks[0].id == "contour.balance.n1");
    CHECK(report.checks[0].equation_tag == "Eq3");
    CHECK(report.checks[1].equation_tag == "Eq4");
    CHECK(report.checks[2].equation_tag == "Eq5");
    CHECK(report.checks[14].id == "contour.decomposition.n5");
}

TEST_CASE("report body is reproducible modulo wall times") {
    SuiteOverrides ov;
    ov.n_max = 2;
    const auto a = run_suite(Suite::contour, ov).to_json_string();
    const auto b = run_suite(Suite::contour, ov).to_json_string();
    CHECK(without_wall_times(a) == without_wall_times(b));
    CHECK(without_wall_times(a).dump(2) == without_wall_times(b).dump(2));
}

TEST_CASE("report JSON carries the summary contract") {
    const auto report = run_suite(Suite::zeta);
    const auto doc = nlohmann::json::parse(report.to_json_string());
    CHECK(doc["suite"] == "zeta");
    CHECK(doc["summary"]["passed"].get<int>() + doc["summary"]["failed"].get<int>() ==
          doc["summary"]["total"].get<int>());
    for (const auto& check : doc["checks"]) {
        CHECK(check.contains("id"));
        CHECK(check.contains("equation_tag"));
        CHECK(check.contains("status"));
        CHECK(check.contains("discrepancy"));
        CHECK(check.contains("tolerance"));
        CHECK(check.contains("evaluations"));
        CHECK(check.contains("wall_time"));
    }
}

TEST_CASE("emit_series seq_a rows shrink toward the limit") {
    std::ostringstream out;
    const auto rows = emit_series(SeriesKind::seq_a, {1, 10, 100}, out);
    CHECK(rows == 3);
    const auto lines = csv_lines(out.str());
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "n,value,reference,abs_error");
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split_csv(lines[i]);
        REQUIRE(cells.size() == 4);
        const double err = std::stod(cells[3]);
        CHECK(err < prev);
        prev = err;
        // shortest round-trip: value re-parses to the same double
        const double value = std::stod(cells[1]);
        const double reference = std::stod(cells[2]);
        CHECK(std::abs(std::abs(value - reference) - err) <= 1e-17);
    }
}

TEST_CASE("emit_series arc_limit carries the sqrt(2) reference") {
    std::ostringstream out;
    emit_series(SeriesKind::arc_limit, {1, 4, 16}, out);
    const auto lines = csv_lines(out.str());
    REQUIRE(lines.size() == 4);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        CHECK(split_csv(lines[i])[2] == "1.4142135623730951");
    }
}

TEST_CASE("emit_series zeta_partial and tail_b references") {
    std::ostringstream out;
    emit_series(SeriesKind::zeta_partial, {100, 10000}, out);
    auto lines = csv_lines(out.str());
    CHECK(std::stod(split_csv(lines[1])[2]) == doctest::Approx(ref::kZetaHalf).epsilon(1e-9));

    std::ostringstream out2;
    emit_series(SeriesKind::tail_b, {1, 4}, out2);
    lines = csv_lines(out2.str());
    CHECK(split_csv(lines[1])[2] == "0");
    CHECK(std::stod(split_csv(lines[1])[1]) == doctest::Approx(ref::kTail1).epsilon(1e-8));
}

TEST_CASE("emit_series input validation") {
    std::ostringstream out;
    CHECK_THROWS_AS(emit_series(SeriesKind::seq_a, {}, out), InvalidOverrideError);
    CHECK_THROWS_AS(emit_series(SeriesKind::seq_a, {10, 5}, out), InvalidOverrideError);
    CHECK_THROWS_AS(emit_series(SeriesKind::seq_a, {5, 5}, out), InvalidOverrideError);
    CHECK_THROWS_AS(emit_series(SeriesKind::seq_a, {0, 5}, out), InvalidOverrideError);
}

#ifdef GRV_CLI_PATH
TEST_CASE("CLI exit codes") {
    const std::string cli = GRV_CLI_PATH;
    auto exit_code = [](int status) {
#ifdef _WIN32
        return status;
#else
        return WEXITSTATUS(status);
#endif
    };
    CHECK(exit_code(std::system((cli + " verify gaussian > /dev/null").c_str())) == 0);
    CHECK(exit_code(std::system(
              (cli + " verify gaussian --out /tmp/grv_out_test.json").c_str())) == 0);
    const auto filed = nlohmann::json::parse(std::ifstream("/tmp/grv_out_test.json"));
    CHECK(filed["summary"]["total"].get<int>() == 3);
    CHECK(exit_code(std::system(
              (cli + " series tail_b --n 1,4 --out /tmp/grv_out_test.csv").c_str())) == 0);
    std::ifstream csv("/tmp/grv_out_test.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "n,value,reference,abs_error");
    CHECK(exit_code(std::system(
              (cli + " verify gaussian --out /nonexistent-dir/x.json 2> /dev/null").c_str())) ==
          2);
    CHECK(exit_code(std::system((cli + " verify bogus 2> /dev/null").c_str())) == 2);
    CHECK(exit_code(std::system((cli + " verify all --tol -1 2> /dev/null").c_str())) == 2);
    CHECK(exit_code(std::system((cli + " series bogus --n 1,2 2> /dev/null").c_str())) == 2);
    CHECK(exit_code(std::system((cli + " series seq_a --n 3,2 2> /dev/null").c_str())) == 2);
    // env override: GRV_NMAX shrinks the contour sweep; flag wins over env
    CHECK(exit_code(std::system(
              ("GRV_NMAX=1 " + cli + " verify contour > /tmp/grv_env_test.json").c_str())) == 0);
    auto doc = nlohmann::json::parse(std::ifstream("/tmp/grv_env_test.json"));
    CHECK(doc["summary"]["total"].get<int>() == 3);
    CHECK(exit_code(std::system(("GRV_NMAX=1 " + cli +
                                 " verify contour --n-max 2 > /tmp/grv_env_test.json")
                                    .c_str())) == 0);
    doc = nlohmann::json::parse(std::ifstream("/tmp/grv_env_test.json"));
    CHECK(doc["summary"]["total"].get<int>() == 6);
}
#endif
