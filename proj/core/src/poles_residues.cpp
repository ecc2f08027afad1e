#include "grv/poles_residues.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "grv/kahan.hpp"
#include "grv/pole_lattice.hpp"
#include "grv/stable_eval.hpp"

namespace grv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> pole_location(Pole::Family family, long long k) {
    const double r = std::sqrt((2.0 * static_cast<double>(k) + 1.0) * kPi / 2.0);
    return family == Pole::Family::A ? std::complex<double>{r, r} : std::complex<double>{-r, r};
}

// Distance from this pole to its nearest lattice neighbor. Candidates are the
// adjacent shells of the same ray and the mirror ray at the same shell.
double nearest_neighbor_distance(std::complex<double> c) {
    const double r2 = std::norm(c);  // (2k+1) pi
    const long long k = std::llround((r2 / kPi - 1.0) / 2.0);
    double best = std::abs(c.real()) * 2.0;  // cross-family partner at the same shell
    for (long long j = std::max(0LL, k - 1); j <= k + 1; ++j) {
        if (j == k) continue;
        const double rj = std::sqrt((2.0 * static_cast<double>(j) + 1.0) * kPi);
        best = std::min(best, std::abs(rj - std::abs(c)));
    }
    return best;
}

}  // namespace

std::vector<Pole> enumerate_poles(long long k_max) {
    if (k_max < 0) {
        throw Error("enumerate_poles: k_max must be >= 0");
    }
    std::vector<Pole> poles;
    poles.reserve(static_cast<std::size_t>(2 * (k_max + 1)));
    for (Pole::Family fam : {Pole::Family::A, Pole::Family::B}) {
        for (long long k = 0; k <= k_max; ++k) {
            Pole p;
            p.family = fam;
            p.k = k;
            const std::complex<double> c = pole_location(fam, k);
            p.location = ComplexPoint::from(c);
            p.residue = ComplexPoint::from(-1.0 / (2.0 * c));
            poles.push_back(p);
        }
    }
    return poles;
}

ComplexPoint residue_closed_form(ComplexPoint c) {
    const double d = lattice_distance(c.cx());
    if (d > 1e-10) {
        throw NotAPoleError("residue_closed_form: point is " + std::to_string(d) +
                            " away from the pole lattice");
    }
    return ComplexPoint::from(-1.0 / (2.0 * c.cx()));
}

ComplexPoint residue_numeric_oracle(const Pole& p, double radius, double tol) {
    const std::complex<double> c = p.location.cx();
    const double limit = 0.5 * nearest_neighbor_distance(c);
    if (!(radius > 0.0) || radius >= limit) {
        throw RadiusTooLargeError("residue_numeric_oracle: radius " + std::to_string(radius) +
                                  " not inside (0, " + std::to_string(limit) + ")");
    }

    // (1/2 pi i) oint f dz  =  (1/2 pi) int_0^{2pi} f(c + r e^{i t}) r e^{i t} dt
    auto integrand = [&](double t) {
        const std::complex<double> offset = radius * std::polar(1.0, t);
        const std::complex<double> z = c + offset;
        return detail::fermi_from_square(z * z) * offset;
    };
    QuadOptions opts;
    opts.tol = tol;
    auto r = integrate_adaptive_complex(integrand, 0.0, kTwoPi, opts);
    r.require_converged("residue_numeric_oracle");
    return ComplexPoint::from(r.value / kTwoPi);
}

double residue_sum_rhs(long long n) {
    if (n < 1) {
        throw Error("residue_sum_rhs: n must be >= 1");
    }
    KahanSum sum;
    for (long long k = 0; k < n; ++k) {
        sum.add(1.0 / std::sqrt(2.0 * static_cast<double>(k) + 1.0));
    }
    return -std::sqrt(kTwoPi) * sum.value();
}

}  // namespace grv
