#include "grv/contour_verify.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "grv/poles_residues.hpp"
#include "grv/stable_eval.hpp"

namespace grv {

namespace {

constexpr double kPi = std::numbers::pi;

double default_radius(long long n) { return std::sqrt(2.0 * kPi * static_cast<double>(n)); }

void check_n(long long n, const char* who) {
    if (n < 1) {
        throw Error(std::string(who) + ": n must be >= 1");
    }
}

// Inner quadrature tolerance: comfortably below the balance tolerance so the
// two independent integrals cannot eat the whole budget between them.
QuadOptions inner_opts(double tol) {
    QuadOptions opts;
    opts.tol = tol / 20.0;
    return opts;
}

RefinementSeed ridge_seeds() { return RefinementSeed{{kPi / 4.0, 3.0 * kPi / 4.0}}; }

double fermi_real(double x) {
    const double e = std::exp(-x * x);
    return e / (1.0 + e);
}

// The unscaled arc integrand e^{iv} / (e^{w_scale e^{2iv}} + 1).
QuadResult<std::complex<double>> unscaled_arc(double w_scale, const QuadOptions& opts) {
    auto f = [w_scale](double v) {
        return std::polar(1.0, v) *
               detail::fermi_from_square(w_scale * std::polar(1.0, 2.0 * v));
    };
    return integrate_adaptive_complex(f, 0.0, kPi, opts, ridge_seeds());
}

}  // namespace

ContourSpec build_contour(long long n) {
    check_n(n, "build_contour");
    ContourSpec spec;
    spec.n = n;
    spec.radius = default_radius(n);
    spec.segment = {-spec.radius, spec.radius};
    spec.arc_range = {0.0, kPi};
    return spec;
}

ContourSpec build_contour(long long n, double radius) {
    check_n(n, "build_contour");
    const double lo = std::sqrt((2.0 * static_cast<double>(n) - 1.0) * kPi);
    const double hi = std::sqrt((2.0 * static_cast<double>(n) + 1.0) * kPi);
    if (!(radius > lo) || !(radius < hi)) {
        throw RadiusOutOfRangeError("build_contour: radius " + std::to_string(radius) +
                                    " outside the pole-free band (" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + ")");
    }
    ContourSpec spec;
    spec.n = n;
    spec.radius = radius;
    spec.segment = {-radius, radius};
    spec.arc_range = {0.0, kPi};
    return spec;
}

QuadResult<double> segment_integral(long long n, double tol, std::optional<double> radius) {
    check_n(n, "segment_integral");
    const ContourSpec spec = radius ? build_contour(n, *radius) : build_contour(n);
    QuadOptions opts;
    opts.tol = tol;
    auto r = integrate_adaptive([](double x) { return fermi_real(x); }, spec.segment.first,
                                spec.segment.second, opts);
    r.require_converged("segment_integral");
    return r;
}

QuadResult<std::complex<double>> arc_integral(long long n, double tol,
                                              std::optional<double> radius) {
    check_n(n, "arc_integral");
    const ContourSpec spec = radius ? build_contour(n, *radius) : build_contour(n);
    // For the default contour the exponent scale is exactly 2 n pi.
    const double w_scale = radius ? spec.radius * spec.radius
                                  : 2.0 * kPi * static_cast<double>(n);
    const double h = spec.radius;
    QuadOptions opts;
    opts.tol = tol;
    auto f = [w_scale, h](double v) {
        const std::complex<double> eiv = std::polar(1.0, v);
        return h * std::complex<double>{0.0, 1.0} * eiv *
               detail::fermi_from_square(w_scale * std::polar(1.0, 2.0 * v));
    };
    auto r = integrate_adaptive_complex(f, 0.0, kPi, opts, ridge_seeds());
    r.require_converged("arc_integral");
    return r;
}

ContourBalance residue_theorem_check(long long n, double tol) {
    check_n(n, "residue_theorem_check");
    const QuadOptions opts = inner_opts(tol);
    auto seg = segment_integral(n, opts.tol);
    auto arc = arc_integral(n, opts.tol);

    ContourBalance bal;
    bal.n = n;
    bal.segment_value = seg.value;
    bal.arc_value = ComplexPoint::from(arc.value);
    bal.rhs = residue_sum_rhs(n);
    bal.discrepancy = std::abs(seg.value + arc.value - bal.rhs);
    bal.evaluations = seg.evaluations + arc.evaluations;
    if (bal.discrepancy > tol) {
        throw BalanceFailedError("residue theorem balance failed at n = " + std::to_string(n) +
                                     ": discrepancy " + std::to_string(bal.discrepancy),
                                 bal.discrepancy);
    }
    return bal;
}

std::vector<ArcLimitPoint> arc_limit_scan(const std::vector<long long>& n_list, double tol) {
    if (n_list.empty()) {
        throw Error("arc_limit_scan: empty n list");
    }
    QuadOptions opts;
    opts.tol = tol;
    std::vector<ArcLimitPoint> out;
    out.reserve(n_list.size());
    for (long long n : n_list) {
        check_n(n, "arc_limit_scan");
        auto r = unscaled_arc(2.0 * kPi * static_cast<double>(n), opts);
        r.require_converged("arc_limit_scan");
        ArcLimitPoint p;
        p.n = n;
        p.s_value = r.value.imag();
        p.real_part = r.value.real();
        p.evaluations = r.evaluations;
        out.push_back(p);
    }
    return out;
}

double small_radius_check(double H, double tol) {
    const double first_pole = std::sqrt(kPi);
    if (!(H >= 0.0) || H >= first_pole) {
        throw RadiusOutOfRangeError("small_radius_check: H must lie in [0, sqrt(pi)); got " +
                                    std::to_string(H));
    }
    if (H == 0.0) {
        return 0.0;  // both pieces vanish identically
    }
    const QuadOptions opts = inner_opts(tol);
    auto seg = integrate_adaptive([](double x) { return fermi_real(x); }, -H, H, opts);
    seg.require_converged("small_radius_check segment");

    const double w_scale = H * H;
    auto f = [w_scale, H](double v) {
        return H * std::complex<double>{0.0, 1.0} * std::polar(1.0, v) *
               detail::fermi_from_square(w_scale * std::polar(1.0, 2.0 * v));
    };
    auto arc = integrate_adaptive_complex(f, 0.0, kPi, opts, ridge_seeds());
    arc.require_converged("small_radius_check arc");

    const double discrepancy = std::abs(seg.value + arc.value);
    if (discrepancy > tol) {
        throw BalanceFailedError("no-pole contour balance failed at H = " + std::to_string(H) +
                                     ": discrepancy " + std::to_string(discrepancy),
                                 discrepancy);
    }
    return discrepancy;
}

double realpart_zero_check(double H, double tol) {
    if (!std::isfinite(H)) {
        throw NonFiniteError("realpart_zero_check: H must be finite");
    }
    const QuadOptions opts = inner_opts(tol);
    // Note the exponent here is H e^{2iv}, first power of H.
    auto r = unscaled_arc(H, opts);
    r.require_converged("realpart_zero_check");
    const double re = std::abs(r.value.real());
    if (re > tol) {
        throw BalanceFailedError("real-part identity failed at H = " + std::to_string(H) +
                                     ": |Re| = " + std::to_string(re),
                                 re);
    }
    return re;
}

double decomposition_check(long long n, double tol) {
    check_n(n, "decomposition_check");
    const QuadOptions opts = inner_opts(tol);
    auto seg = segment_integral(n, opts.tol);
    auto arc = unscaled_arc(2.0 * kPi * static_cast<double>(n), opts);
    arc.require_converged("decomposition_check arc");
    const double s_n = arc.value.imag();
    const double odd_sum = -residue_sum_rhs(n);  // sqrt(2 pi) sum (2k+1)^{-1/2}
    const double discrepancy =
        std::abs(seg.value + odd_sum - default_radius(n) * s_n);
    if (discrepancy > tol) {
        throw BalanceFailedError("decomposition identity failed at n = " + std::to_string(n) +
                                     ": discrepancy " + std::to_string(discrepancy),
                                 discrepancy);
    }
    return discrepancy;
}

}  // namespace grv
