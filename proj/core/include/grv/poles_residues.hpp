#pragma once

#include <vector>

#include "grv/complex_point.hpp"
#include "grv/quadrature.hpp"

namespace grv {

/// One upper-half-plane pole of 1/(e^{z^2}+1).
/// Family A sits on the ray arg z = pi/4 (positive real part), family B on
/// arg z = 3pi/4. The simple-pole residue is -1/(2c).
struct Pole {
    enum class Family { A, B };

    Family family = Family::A;
    long long k = 0;
    ComplexPoint location;
    ComplexPoint residue;
};

/// The 2(k_max+1) upper-half poles A_0..A_kmax, B_0..B_kmax, residues filled.
std::vector<Pole> enumerate_poles(long long k_max);

/// -1/(2c) for a validated lattice point c (within 1e-10 absolute of the
/// lattice, else NotAPoleError).
ComplexPoint residue_closed_form(ComplexPoint c);

/// Independent check of the closed form: (1/2 pi i) times the contour
/// integral of 1/(e^{z^2}+1) over the circle |z - location| = radius, by
/// adaptive quadrature in the angle. The radius must stay under half the
/// distance to the nearest other lattice point.
ComplexPoint residue_numeric_oracle(const Pole& p, double radius, double tol);

/// 2 pi i times the sum of the first n A/B residue pairs. Each pair sum is
/// real: 2 pi i (res A_k + res B_k) = -sqrt(2 pi)/sqrt(2k+1), so the total is
/// -sqrt(2 pi) * sum_{k=0}^{n-1} (2k+1)^{-1/2}.
double residue_sum_rhs(long long n);

}  // namespace grv
