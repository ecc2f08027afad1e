#include "grv/pole_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace grv {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

}  // namespace

std::complex<double> nearest_lattice_point(std::complex<double> z) {
    std::complex<double> best{std::sqrt(kPi / 2.0), std::sqrt(kPi / 2.0)};
    double best_d = std::abs(z - best);

    // One ray per sign family; the nearest point on a ray sits at the lattice
    // radius closest to the scalar projection of z onto that ray.
    for (double sr : {1.0, -1.0}) {
        for (double si : {1.0, -1.0}) {
            const std::complex<double> u{sr * kInvSqrt2, si * kInvSqrt2};
            const double t = z.real() * u.real() + z.imag() * u.imag();
            long long k0 = 0;
            if (t > 0.0) {
                k0 = std::max(0LL, static_cast<long long>(std::round((t * t / kPi - 1.0) / 2.0)));
            }
            for (long long k = std::max(0LL, k0 - 1); k <= k0 + 1; ++k) {
                const double r = std::sqrt((2.0 * static_cast<double>(k) + 1.0) * kPi);
                const std::complex<double> c = u * r;
                const double d = std::abs(z - c);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
        }
    }
    return best;
}

double lattice_distance(std::complex<double> z) {
    return std::abs(z - nearest_lattice_point(z));
}

}  // namespace grv
