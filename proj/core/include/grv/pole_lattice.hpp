#pragma once

#include <complex>

namespace grv {

// The zeros of e^{z^2}+1 form a four-ray lattice on the diagonals y = ±x:
//   z = (±1 ± i) sqrt((2k+1) pi / 2),   k = 0, 1, 2, ...
// with moduli sqrt((2k+1) pi). The upper-half members are the A_k / B_k
// families used by the contour; the lower-half mirrors matter only for
// evaluation safety.

/// Lattice point nearest to z (any of the four sign families).
std::complex<double> nearest_lattice_point(std::complex<double> z);

/// Euclidean distance from z to the nearest lattice point.
double lattice_distance(std::complex<double> z);

}  // namespace grv
