#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "grv/complex_point.hpp"
#include "grv/quadrature.hpp"

namespace grv {

/// The closed contour G_n: the segment [-H_n, H_n] joined to the upper
/// semicircle of radius H_n = sqrt(2 n pi), which interleaves the pole moduli
/// sqrt((2n-1) pi) < H_n < sqrt((2n+1) pi).
struct ContourSpec {
    long long n = 1;
    double radius = 0.0;
    std::pair<double, double> segment{0.0, 0.0};
    std::pair<double, double> arc_range{0.0, 0.0};
};

/// One finite-n residue-theorem balance: segment + arc against the residue
/// sum, discrepancy taken in the complex plane.
struct ContourBalance {
    long long n = 1;
    double segment_value = 0.0;
    ComplexPoint arc_value;
    double rhs = 0.0;
    double discrepancy = 0.0;
    std::size_t evaluations = 0;
};

/// One entry of the arc-limit scan: s_n is the imaginary part of
/// int_0^pi e^{iv} / (e^{2 n pi e^{2iv}} + 1) dv (limit sqrt(2)), real_part
/// its companion real integral (identically zero).
struct ArcLimitPoint {
    long long n = 1;
    double s_value = 0.0;
    double real_part = 0.0;
    std::size_t evaluations = 0;
};

ContourSpec build_contour(long long n);

/// Alternate radius inside the admissible interleave band (not used by the
/// default checks).
ContourSpec build_contour(long long n, double radius);

/// int_{-H_n}^{H_n} dx / (e^{x^2}+1); positive, strictly increasing in n.
QuadResult<double> segment_integral(long long n, double tol,
                                    std::optional<double> radius = std::nullopt);

/// int_0^pi H i e^{iv} / (e^{H^2 e^{2iv}} + 1) dv, with refinement seeds at
/// v = pi/4 and 3pi/4 where the integrand ridges over the nearby poles.
QuadResult<std::complex<double>> arc_integral(long long n, double tol,
                                              std::optional<double> radius = std::nullopt);

/// Verifies segment + arc = 2 pi i (sum of enclosed residues). Returns the
/// balance on success, throws BalanceFailedError when the discrepancy
/// exceeds tol.
ContourBalance residue_theorem_check(long long n, double tol);

/// s_n and its companion real part for each requested n.
std::vector<ArcLimitPoint> arc_limit_scan(const std::vector<long long>& n_list, double tol);

/// No-pole identity for 0 <= H < sqrt(pi): the closed contour integral must
/// vanish. Returns the discrepancy; throws RadiusOutOfRangeError or
/// BalanceFailedError.
double small_radius_check(double H, double tol);

/// |Re int_0^pi e^{iv} / (e^{H e^{2iv}} + 1) dv| for real H (H in the
/// exponent, not H^2); the integral is purely imaginary for every real H.
double realpart_zero_check(double H, double tol);

/// Checks segment + sqrt(2 pi) sum_{k<n} (2k+1)^{-1/2} = sqrt(2 n pi) s_n,
/// with s_n from an independent quadrature of the unscaled arc integrand.
double decomposition_check(long long n, double tol);

}  // namespace grv
