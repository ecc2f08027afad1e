#pragma once

#include <complex>

#include "grv/complex_point.hpp"

namespace grv {

namespace detail {

/// 1/(e^w + 1) evaluated from the exponent w = z^2 directly, choosing the
/// branch whose exponential decays:
///   Re(w) >= 0:  e^{-w} / (1 + e^{-w})
///   Re(w) <  0:  1 / (e^{w} + 1)
/// Either way only |e| <= 1 factors are formed, so the result is finite for
/// every w away from the poles w = (2k+1) pi i.
std::complex<double> fermi_from_square(std::complex<double> w) noexcept;

/// The textbook form 1/(e^w + 1) with no branch selection. Kept for the
/// branch-consistency tests; refuses |Re w| beyond the overflow threshold.
std::complex<double> fermi_direct(std::complex<double> w, const EvalPolicy& policy);

}  // namespace detail

/// 1/(e^{z^2} + 1), overflow-free. Refuses evaluation closer to the pole
/// lattice than policy.pole_guard().
ComplexPoint fermi_integrand(ComplexPoint z, const EvalPolicy& policy = EvalPolicy{});

/// e^{-n x^2} / (e^{x^2} + 1) for real x, n >= 1. Computed as
/// e^{-(n+1)x^2} / (1 + e^{-x^2}); both exponents are non-positive, so the
/// value lies in [0, 1/2] for every finite x.
double damped_integrand(double x, long long n);

/// Integrand of the arc piece: H i e^{iv} / (e^{H^2 e^{2iv}} + 1) with
/// H = sqrt(2 n pi). The exponent is formed as 2 n pi e^{2iv} so the arc
/// radius enters exactly.
ComplexPoint arc_integrand(double v, long long n, const EvalPolicy& policy = EvalPolicy{});

}  // namespace grv
