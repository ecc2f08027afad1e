#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grv/errors.hpp"

namespace grv {

enum class Suite { contour, sequences, series, zeta, gaussian, all };

enum class SeriesKind { seq_a, arc_limit, zeta_partial, tail_b };

/// Parses a suite / series-kind name; throws UnknownSuiteError /
/// UnknownKindError.
Suite parse_suite(std::string_view name);
SeriesKind parse_series_kind(std::string_view name);

/// Optional parameter overrides, validated by run_suite.
struct SuiteOverrides {
    std::optional<long long> n_max;          // contour checks; default 10
    std::optional<double> tol;               // balance tolerance for quadrature checks
    std::optional<int> terms;                // eta acceleration budget; default 40
    std::optional<std::vector<double>> y_list;  // f(y) sample points
};

struct CheckResult {
    std::string id;
    std::string equation_tag;
    bool passed = false;
    double discrepancy = 0.0;
    double tolerance = 0.0;
    std::size_t evaluations = 0;
    double wall_time = 0.0;  // seconds
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;

    int passed() const;
    int failed() const;
    int total() const { return static_cast<int>(checks.size()); }

    /// Stable-order JSON document (schema: suite, checks[], summary),
    /// pretty-printed with LF endings. Byte-identical across reruns except
    /// for the wall_time fields.
    std::string to_json_string() const;
};

/// Runs every check of the suite deterministically. Per-check failures are
/// recorded, not thrown; configuration problems throw InvalidOverrideError.
VerificationReport run_suite(Suite suite, const SuiteOverrides& overrides = {});

/// Writes `n,value,reference,abs_error` CSV rows (shortest round-trip
/// formatting, LF endings) for the requested convergence series. n_list must
/// be non-empty and strictly ascending. Returns the number of data rows.
std::size_t emit_series(SeriesKind kind, const std::vector<long long>& n_list, std::ostream& out);

}  // namespace grv
