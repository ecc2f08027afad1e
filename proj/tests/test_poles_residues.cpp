#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "grv/kahan.hpp"
#include "grv/pole_lattice.hpp"
#include "grv/poles_residues.hpp"
#include "reference_values.hpp"

using namespace grv;
namespace ref = grv::testref;

namespace {
constexpr double kPi = std::numbers::pi;

double half_neighbor_distance(long long k) {
    const double rk = std::sqrt((2.0 * static_cast<double>(k) + 1.0) * kPi);
    double best = 2.0 * std::sqrt((2.0 * static_cast<double>(k) + 1.0) * kPi / 2.0);
    if (k > 0) {
        best = std::min(best, rk - std::sqrt((2.0 * static_cast<double>(k) - 1.0) * kPi));
    }
    best = std::min(best, std::sqrt((2.0 * static_cast<double>(k) + 3.0) * kPi) - rk);
    return 0.5 * best;
}
}  // namespace

TEST_CASE("enumerate_poles basic layout") {
    const auto poles = enumerate_poles(0);
    REQUIRE(poles.size() == 2);
    CHECK(poles[0].family == Pole::Family::A);
    CHECK(poles[0].location.re == doctest::Approx(ref::kSqrtHalfPi).epsilon(1e-14));
    CHECK(poles[0].location.im == doctest::Approx(ref::kSqrtHalfPi).epsilon(1e-14));
    CHECK(poles[1].family == Pole::Family::B);
    CHECK(poles[1].location.re == doctest::Approx(-ref::kSqrtHalfPi).epsilon(1e-14));
    CHECK(poles[1].location.im == doctest::Approx(ref::kSqrtHalfPi).epsilon(1e-14));
    CHECK(poles[0].location.abs() == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));

    const auto more = enumerate_poles(1);
    REQUIRE(more.size() == 4);
    CHECK(more[1].k == 1);
    CHECK(more[1].location.re == doctest::Approx(ref::kSqrt3HalfPi).epsilon(1e-14));

    CHECK_THROWS_AS(enumerate_poles(-1), Error);
}

TEST_CASE("pole invariants up to k = 20") {
    const auto poles = enumerate_poles(20);
    REQUIRE(poles.size() == 42);
    for (const auto& p : poles) {
        const double want_mod = std::sqrt((2.0 * static_cast<double>(p.k) + 1.0) * kPi);
        CHECK(p.location.abs() == doctest::Approx(want_mod).epsilon(1e-14));
        CHECK(p.location.im > 0.0);
        if (p.family == Pole::Family::A) {
            CHECK(p.location.re > 0.0);
        } else {
            CHECK(p.location.re < 0.0);
        }
        // residue * (-2c) must give 1
        const std::complex<double> product = p.residue.cx() * (-2.0 * p.location.cx());
        CHECK(std::abs(product - 1.0) < 1e-14);
        CHECK(lattice_distance(p.location.cx()) < 1e-14);
    }
}

TEST_CASE("residue closed form values") {
    const auto poles = enumerate_poles(2);
    const auto res_a0 = residue_closed_form(poles[0].location);
    CHECK(res_a0.re == doctest::Approx(-ref::kResA0Mag).epsilon(1e-12));
    CHECK(res_a0.im == doctest::Approx(ref::kResA0Mag).epsilon(1e-12));

    const auto res_b0 = residue_closed_form(poles[3].location);
    CHECK(res_b0.re == doctest::Approx(ref::kResA0Mag).epsilon(1e-12));
    CHECK(res_b0.im == doctest::Approx(ref::kResA0Mag).epsilon(1e-12));

    CHECK_THROWS_AS(residue_closed_form(ComplexPoint(1.0, 1.0)), NotAPoleError);
    // within the 1e-10 validation band
    CHECK_NOTHROW(residue_closed_form(
        ComplexPoint(ref::kSqrtHalfPi + 5e-11, ref::kSqrtHalfPi)));
}

TEST_CASE("A/B pair sums are real and telescope to the rhs") {
    const auto poles = enumerate_poles(20);
    const std::complex<double> two_pi_i{0.0, 2.0 * kPi};
    for (long long k = 0; k <= 20; ++k) {
        const auto& a = poles[static_cast<std::size_t>(k)];
        const auto& b = poles[static_cast<std::size_t>(21 + k)];
        const std::complex<double> pair = two_pi_i * (a.residue.cx() + b.residue.cx());
        const double want = -std::sqrt(2.0 * kPi) / std::sqrt(2.0 * static_cast<double>(k) + 1.0);
        CHECK(std::abs(pair.imag()) < 1e-15);
        CHECK(pair.real() == doctest::Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("residue_sum_rhs values and direct summation agreement") {
    CHECK(residue_sum_rhs(1) == doctest::Approx(-ref::kSqrt2Pi).epsilon(1e-14));
    CHECK(residue_sum_rhs(2) == doctest::Approx(ref::kRhs2).epsilon(1e-14));

    // direct complex summation over the enumerated poles
    const auto poles = enumerate_poles(19);
    std::complex<double> sum = 0.0;
    for (const auto& p : poles) {
        sum += p.residue.cx();
    }
    const std::complex<double> direct = std::complex<double>{0.0, 2.0 * kPi} * sum;
    CHECK(std::abs(direct.imag()) < 1e-14);
    CHECK(direct.real() == doctest::Approx(residue_sum_rhs(20)).epsilon(1e-13));

    double prev = 0.0;
    for (long long n = 1; n <= 100; ++n) {
        const double v = residue_sum_rhs(n);
        CHECK(v < prev);
        prev = v;

        KahanSum partial;
        for (long long k = 0; k < n; ++k) {
            partial.add(1.0 / std::sqrt(2.0 * static_cast<double>(k) + 1.0));
        }
        CHECK(v == doctest::Approx(-std::sqrt(2.0 * kPi) * partial.value()).epsilon(1e-13));
    }
    CHECK_THROWS_AS(residue_sum_rhs(0), Error);
}

TEST_CASE("pole moduli interleave the contour radii") {
    for (long long n = 1; n <= 10000; ++n) {
        const double nd = static_cast<double>(n);
        const double below = std::sqrt((2.0 * nd - 1.0) * kPi);
        const double radius = std::sqrt(2.0 * nd * kPi);
        const double above = std::sqrt((2.0 * nd + 1.0) * kPi);
        CHECK(below < radius);
        CHECK(radius < above);
    }
}

TEST_CASE("numeric oracle confirms the closed form") {
    const auto poles = enumerate_poles(10);

    const auto a0 = residue_numeric_oracle(poles[0], 0.3, 1e-12);
    const auto a0_closed = residue_closed_form(poles[0].location);
    CHECK(std::abs(a0.cx() - a0_closed.cx()) < 1e-10);

    const auto b2 = residue_numeric_oracle(poles[13], 0.2, 1e-12);
    const auto b2_closed = residue_closed_form(poles[13].location);
    CHECK(std::abs(b2.cx() - b2_closed.cx()) < 1e-10);

    // Whole family sweep. A flat radius of 0.2 collides with the
    // half-distance precondition from k = 9 on, so cap at the largest
    // admissible radius per pole.
    for (const auto& p : poles) {
        const double radius = std::min(0.2, 0.9 * half_neighbor_distance(p.k));
        const auto numeric = residue_numeric_oracle(p, radius, 1e-12);
        const auto closed = residue_closed_form(p.location);
        CHECK(std::abs(numeric.cx() - closed.cx()) < 1e-9);
    }
}

TEST_CASE("numeric oracle rejects oversized radii") {
    const auto poles = enumerate_poles(0);
    CHECK_THROWS_AS(residue_numeric_oracle(poles[0], 0.7, 1e-10), RadiusTooLargeError);
    CHECK_THROWS_AS(residue_numeric_oracle(poles[0], -0.1, 1e-10), RadiusTooLargeError);
}
