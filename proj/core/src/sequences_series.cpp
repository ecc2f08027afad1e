#include "grv/sequences_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "grv/kahan.hpp"
#include "grv/quadrature.hpp"
#include "grv/stable_eval.hpp"

namespace grv {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::numbers::sqrt2;

void check_n(long long n, const char* who) {
    if (n < 1) {
        throw Error(std::string(who) + ": n must be >= 1");
    }
}

// sum_{k=0}^{n-1} (2k+1)^{-1/2}
double odd_root_sum(long long n) {
    KahanSum s;
    for (long long k = 0; k < n; ++k) {
        s.add(1.0 / std::sqrt(2.0 * static_cast<double>(k) + 1.0));
    }
    return s.value();
}

// sum_{k=1}^{n} k^{-1/2}
double root_sum(long long n) {
    KahanSum s;
    for (long long k = 1; k <= n; ++k) {
        s.add(1.0 / std::sqrt(static_cast<double>(k)));
    }
    return s.value();
}

// sum_{k=1}^{m} (-1)^{k+1} k^{-1/2}
double alt_root_sum(long long m) {
    KahanSum s;
    for (long long k = 1; k <= m; ++k) {
        const double term = 1.0 / std::sqrt(static_cast<double>(k));
        s.add(k % 2 == 1 ? term : -term);
    }
    return s.value();
}

double seq_a_of(long long n) { return 2.0 * std::sqrt(static_cast<double>(n)) - kSqrt2 * odd_root_sum(n); }
double seq_t_of(long long n) { return 2.0 * std::sqrt(static_cast<double>(n)) - root_sum(n); }

IdentityResiduals residuals_from(double a_n, double t_n, double alt_2n, double a_2n, double t_2n,
                                 double alt_4n) {
    IdentityResiduals r;
    r.eq10 = std::abs(t_n - a_n - kSqrt2 * alt_2n);
    r.eq11 = std::abs(a_n + t_n - kSqrt2 * t_2n);
    r.eq12 = std::abs(kSqrt2 * a_2n - 2.0 * a_n - kSqrt2 * alt_2n + 2.0 * alt_4n);
    return r;
}

}  // namespace

IdentityResiduals identity_checks(long long n) {
    check_n(n, "identity_checks");
    return residuals_from(seq_a_of(n), seq_t_of(n), alt_root_sum(2 * n), seq_a_of(2 * n),
                          seq_t_of(2 * n), alt_root_sum(4 * n));
}

SequenceRecord seq_values(long long n) {
    check_n(n, "seq_values");
    SequenceRecord rec;
    rec.n = n;
    rec.seq_a = seq_a_of(n);
    rec.seq_t = seq_t_of(n);
    rec.seq_alt = alt_root_sum(2 * n);
    const IdentityResiduals r = identity_checks(n);
    rec.residual_eq10 = r.eq10;
    rec.residual_eq11 = r.eq11;
    rec.residual_eq12 = r.eq12;
    return rec;
}

IdentityResiduals max_identity_residuals(long long n_max) {
    check_n(n_max, "max_identity_residuals");
    // One pass with compensated prefix sums up to 4 n_max.
    const long long top = 4 * n_max;
    std::vector<double> odd(static_cast<std::size_t>(2 * n_max + 1));
    std::vector<double> roots(static_cast<std::size_t>(2 * n_max + 1));
    std::vector<double> alt(static_cast<std::size_t>(top + 1));
    {
        KahanSum s;
        odd[0] = 0.0;
        for (long long m = 1; m <= 2 * n_max; ++m) {
            s.add(1.0 / std::sqrt(2.0 * static_cast<double>(m - 1) + 1.0));
            odd[static_cast<std::size_t>(m)] = s.value();
        }
    }
    {
        KahanSum s;
        roots[0] = 0.0;
        for (long long m = 1; m <= 2 * n_max; ++m) {
            s.add(1.0 / std::sqrt(static_cast<double>(m)));
            roots[static_cast<std::size_t>(m)] = s.value();
        }
    }
    {
        KahanSum s;
        alt[0] = 0.0;
        for (long long m = 1; m <= top; ++m) {
            const double term = 1.0 / std::sqrt(static_cast<double>(m));
            s.add(m % 2 == 1 ? term : -term);
            alt[static_cast<std::size_t>(m)] = s.value();
        }
    }
    auto a_of = [&](long long m) {
        return 2.0 * std::sqrt(static_cast<double>(m)) - kSqrt2 * odd[static_cast<std::size_t>(m)];
    };
    auto t_of = [&](long long m) {
        return 2.0 * std::sqrt(static_cast<double>(m)) - roots[static_cast<std::size_t>(m)];
    };

    IdentityResiduals worst;
    for (long long n = 1; n <= n_max; ++n) {
        const IdentityResiduals r =
            residuals_from(a_of(n), t_of(n), alt[static_cast<std::size_t>(2 * n)], a_of(2 * n),
                           t_of(2 * n), alt[static_cast<std::size_t>(4 * n)]);
        worst.eq10 = std::max(worst.eq10, r.eq10);
        worst.eq11 = std::max(worst.eq11, r.eq11);
        worst.eq12 = std::max(worst.eq12, r.eq12);
    }
    return worst;
}

bool monotonicity_scan(long long n_max) {
    if (n_max < 2) {
        throw Error("monotonicity_scan: n_max must be >= 2");
    }
    const double a_sup = std::sqrt(kPi / 2.0);
    KahanSum odd_sum;   // sum over (2k+1)^{-1/2}, k < n
    KahanSum alt_sum;   // alternating sum to 2n
    for (long long n = 1; n <= n_max; ++n) {
        const double nd = static_cast<double>(n);
        odd_sum.add(1.0 / std::sqrt(2.0 * nd - 1.0));
        alt_sum.add(1.0 / std::sqrt(2.0 * nd - 1.0));
        alt_sum.add(-1.0 / std::sqrt(2.0 * nd));

        const double a_n = 2.0 * std::sqrt(nd) - kSqrt2 * odd_sum.value();
        if (!(a_n >= 0.0) || !(a_n < a_sup)) return false;
        if (!(alt_sum.value() <= 1.0)) return false;

        if (n < n_max) {
            // Increment of seq_a with 2 sqrt(n+1) - 2 sqrt(n) in its
            // cancellation-free form; the sqrt(2) carries over from the
            // odd-root sum prefactor.
            const double da = 2.0 / (std::sqrt(nd + 1.0) + std::sqrt(nd)) -
                              kSqrt2 / std::sqrt(2.0 * nd + 1.0);
            const double dalt =
                1.0 / std::sqrt(2.0 * nd + 1.0) - 1.0 / std::sqrt(2.0 * nd + 2.0);
            if (!(da > 0.0) || !(dalt > 0.0)) return false;
        }
    }
    return true;
}

TailResult tail_b(long long n, double tol) {
    check_n(n, "tail_b");
    QuadOptions opts;
    opts.tol = tol;
    auto r = integrate_even_real_line([n](double x) { return damped_integrand(x, n); }, opts);
    r.require_converged("tail_b");

    TailResult out;
    out.value = (n % 2 == 0 ? r.value : -r.value);
    out.bound = std::sqrt(kPi) / (2.0 * std::sqrt(static_cast<double>(n)));
    out.evaluations = r.evaluations;
    if (std::abs(out.value) > out.bound) {
        throw BoundViolatedError("tail_b: |B_n| exceeds sqrt(pi)/(2 sqrt(n)) at n = " +
                                     std::to_string(n),
                                 std::abs(out.value), out.bound);
    }
    return out;
}

double geometric_partial_check(double x, long long n) {
    check_n(n, "geometric_partial_check");
    if (!(std::abs(x) < 1.0)) {
        throw Error("geometric_partial_check: require |x| < 1");
    }
    KahanSum lhs;
    double xp = 1.0;
    for (long long w = 1; w <= n; ++w) {
        xp *= x;
        lhs.add(w % 2 == 1 ? xp : -xp);
    }
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;  // (-1)^n
    const double rhs = (x - sign * xp * x) / (1.0 + x);
    return std::abs(lhs.value() - rhs);
}

double eta_accelerated(double s, int terms) {
    if (!(s > 0.0)) {
        throw Error("eta_accelerated: require s > 0");
    }
    if (terms < 4 || terms > 400) {
        throw Error("eta_accelerated: terms must lie in [4, 400]");
    }
    // Cohen, Rodriguez Villegas, Zagier, "Convergence acceleration of
    // alternating series", Algorithm 1.
    double d = std::pow(3.0 + 2.0 * kSqrt2, terms);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0;
    double c = -d;
    KahanSum acc;
    for (int k = 0; k < terms; ++k) {
        c = b - c;
        acc.add(c * std::pow(static_cast<double>(k + 1), -s));
        b = (k + terms) * (k - terms) * b /
            ((k + 0.5) * (k + 1.0));
    }
    return acc.value() / d;
}

double eta_accelerated(const SeriesParams& params) {
    params.validate();
    return eta_accelerated(params.s, params.terms);
}

double zeta_from_eta(const SeriesParams& params) {
    params.validate();
    return zeta_from_eta(params.s, params.terms);
}

double zeta_from_eta(double s, int terms) {
    if (!(s > 0.0)) {
        throw Error("zeta_from_eta: require s > 0");
    }
    const double denom = 1.0 - std::pow(2.0, 1.0 - s);
    if (std::abs(denom) <= 1e-12) {
        throw PoleAtOneError("zeta_from_eta: s = " + std::to_string(s) +
                             " is within guard distance of the pole at s = 1");
    }
    return eta_accelerated(s, terms) / denom;
}

double zeta_limit_partial(double s, long long n) {
    check_n(n, "zeta_limit_partial");
    if (!(s > 0.0) || !(s < 1.0)) {
        throw Error("zeta_limit_partial: require 0 < s < 1");
    }
    KahanSum sum;
    for (long long k = 1; k <= n; ++k) {
        sum.add(std::pow(static_cast<double>(k), -s));
    }
    return sum.value() - std::pow(static_cast<double>(n), 1.0 - s) / (1.0 - s);
}

double gamma_fn(double x) {
    if (!(x > 0.0)) {
        throw Error("gamma_fn: require x > 0");
    }
    // Lanczos, g = 7, 9 coefficients; relative error ~1e-13 for x in (0, 30].
    static constexpr double p[9] = {
        0.99999999999980993,     676.5203681218851,    -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,  12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    const double z = x - 1.0;
    double a = p[0];
    for (int i = 1; i < 9; ++i) {
        a += p[i] / (z + static_cast<double>(i));
    }
    const double t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

FGeneralResult f_general_check(double y, double tol) {
    if (!(y > 0.0)) {
        throw Error("f_general_check: require y > 0");
    }
    QuadOptions opts;
    opts.tol = tol / 10.0;
    auto integrand = [y](double x) {
        const double t = std::pow(x, y);
        const double e = std::exp(-t);
        return e / (1.0 + e);
    };
    auto lhs = integrate_semi_infinite(integrand, opts);
    lhs.require_converged("f_general_check");

    const double inv_y = 1.0 / y;
    FGeneralResult out;
    out.lhs = lhs.value;
    out.rhs = inv_y * gamma_fn(inv_y) * eta_accelerated(inv_y, 40);
    out.discrepancy = std::abs(out.lhs - out.rhs);
    out.evaluations = lhs.evaluations;
    if (out.discrepancy > tol) {
        throw BalanceFailedError("f(y) identity failed at y = " + std::to_string(y) +
                                     ": discrepancy " + std::to_string(out.discrepancy),
                                 out.discrepancy);
    }
    return out;
}

GaussianClosure final_gaussian_checks(double tol) {
    if (!(tol > 0.0)) {
        throw Error("final_gaussian_checks: tolerance must be positive");
    }
    QuadOptions opts;
    opts.tol = std::min(tol / 10.0, 1e-11);

    GaussianClosure gc;
    {
        auto r = integrate_even_real_line(
            [](double x) {
                const double e = std::exp(-x * x);
                return e / (1.0 + e);
            },
            opts);
        r.require_converged("final_gaussian_checks fermi integral");
        gc.fermi_integral = r.value;
    }
    {
        auto r = integrate_even_real_line([](double x) { return std::exp(-x * x); }, opts);
        r.require_converged("final_gaussian_checks gaussian integral");
        gc.gauss_integral = r.value;
    }
    gc.eta_half = eta_accelerated(0.5, 40);
    gc.zeta_half = zeta_from_eta(0.5, 40);

    const double sqrt_pi = std::sqrt(kPi);
    gc.disc_eta_form = std::abs(gc.fermi_integral - sqrt_pi * gc.eta_half);
    gc.disc_gauss = std::abs(gc.gauss_integral - sqrt_pi);
    gc.disc_zeta_form = std::abs(sqrt_pi * gc.zeta_half * (1.0 - kSqrt2) - gc.fermi_integral);

    if (gc.disc_eta_form > tol) {
        throw BalanceFailedError("Gaussian closure: fermi integral vs sqrt(pi) eta(1/2)",
                                 gc.disc_eta_form);
    }
    if (gc.disc_gauss > tol) {
        throw BalanceFailedError("Gaussian closure: e^{-x^2} integral vs sqrt(pi)",
                                 gc.disc_gauss);
    }
    if (gc.disc_zeta_form > tol) {
        throw BalanceFailedError("Gaussian closure: zeta-form product vs fermi integral",
                                 gc.disc_zeta_form);
    }
    return gc;
}

double extrapolate_seq_a(const std::vector<std::pair<long long, double>>& pairs) {
    if (pairs.size() < 2) {
        throw Error("extrapolate_seq_a: need at least two (n, value) pairs");
    }
    std::vector<std::pair<long long, double>> sorted = pairs;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (sorted[i].first == sorted[i + 1].first) {
            throw DegenerateNodesError("extrapolate_seq_a: repeated n = " +
                                       std::to_string(sorted[i].first));
        }
    }
    const auto& [n1, a1] = sorted[sorted.size() - 2];
    const auto& [n2, a2] = sorted[sorted.size() - 1];
    const double h1 = 1.0 / std::sqrt(static_cast<double>(n1));
    const double h2 = 1.0 / std::sqrt(static_cast<double>(n2));
    return (a1 * h2 - a2 * h1) / (h2 - h1);
}

}  // namespace grv
