#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "grv/errors.hpp"

namespace grv {

// The derivation reuses the letters A/B for both poles and sequences; this
// module owns the sequence meaning under the names seq_a, seq_t, seq_alt,
// tail_b, leaving A/B to poles_residues.

/// Per-n sequence values and the residuals of their three linking identities.
struct SequenceRecord {
    long long n = 1;
    double seq_a = 0.0;    // 2 sqrt(n) - sqrt(2) sum_{k<n} (2k+1)^{-1/2}
    double seq_t = 0.0;    // 2 sqrt(n) - sum_{k<=n} k^{-1/2}
    double seq_alt = 0.0;  // sum_{k<=2n} (-1)^{k+1} k^{-1/2}
    double residual_eq10 = 0.0;
    double residual_eq11 = 0.0;
    double residual_eq12 = 0.0;
};

struct IdentityResiduals {
    double eq10 = 0.0;
    double eq11 = 0.0;
    double eq12 = 0.0;
};

/// Parameter bundle for the series routes: exponent s of eta/zeta, the
/// acceleration term budget, the generalization exponent y of f(y), and the
/// truncation bound b used when a tail has to be probed directly.
struct SeriesParams {
    double s = 0.5;
    int terms = 40;
    double y = 2.0;
    double b = 1e3;

    void validate() const {
        if (!(s > 0.0) || terms < 1 || !(y > 0.0)) {
            throw Error("SeriesParams: require s > 0, terms >= 1, y > 0");
        }
    }
};

struct TailResult {
    double value = 0.0;
    double bound = 0.0;
    std::size_t evaluations = 0;
};

struct FGeneralResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double discrepancy = 0.0;
    std::size_t evaluations = 0;
};

/// The three closing identities, with every ingredient on board.
struct GaussianClosure {
    double fermi_integral = 0.0;  // int_{-inf}^{inf} dx/(e^{x^2}+1)
    double gauss_integral = 0.0;  // int_{-inf}^{inf} e^{-x^2} dx
    double eta_half = 0.0;
    double zeta_half = 0.0;
    double disc_eta_form = 0.0;   // |fermi_integral - sqrt(pi) eta(1/2)|
    double disc_gauss = 0.0;      // |gauss_integral - sqrt(pi)|
    double disc_zeta_form = 0.0;  // |sqrt(pi) zeta(1/2)(1-sqrt 2) - fermi_integral|
};

SequenceRecord seq_values(long long n);

IdentityResiduals identity_checks(long long n);

/// Largest identity residuals over 1 <= n <= n_max (prefix-sum scan; O(n_max)).
IdentityResiduals max_identity_residuals(long long n_max);

/// True iff seq_a and seq_alt strictly increase for all n < n_max and the
/// bounds 0 <= seq_a(n) < sqrt(pi/2), seq_alt(n) <= 1 hold for n <= n_max.
bool monotonicity_scan(long long n_max);

/// (-1)^n int_{-inf}^{inf} e^{-n x^2}/(e^{x^2}+1) dx together with its proven
/// bound sqrt(pi)/(2 sqrt(n)); throws BoundViolatedError if |value| > bound.
TailResult tail_b(long long n, double tol);

/// Residual of the finite geometric identity
/// sum_{w=1}^{n} (-1)^{w+1} x^w = (x - (-1)^n x^{n+1})/(1+x).
double geometric_partial_check(double x, long long n);

/// Dirichlet eta by Cohen-Villegas-Zagier acceleration; the error shrinks
/// like (3+sqrt 8)^{-terms}.
double eta_accelerated(double s, int terms);
double eta_accelerated(const SeriesParams& params);

/// zeta(s) = eta(s)/(1 - 2^{1-s}); throws PoleAtOneError near s = 1.
double zeta_from_eta(double s, int terms);
double zeta_from_eta(const SeriesParams& params);

/// Truncated-sum route for 0 < s < 1:
/// sum_{k=1}^{n} k^{-s} - n^{1-s}/(1-s), converging to zeta(s) at rate n^{-s}.
double zeta_limit_partial(double s, long long n);

/// Gamma by the Lanczos approximation (g = 7, 9 coefficients), x > 0.
double gamma_fn(double x);

/// Compares f(y) = int_0^inf dx/(e^{x^y}+1) against (1/y) Gamma(1/y) eta(1/y).
FGeneralResult f_general_check(double y, double tol);

/// Runs the three closing identities; throws BalanceFailedError naming the
/// first identity whose discrepancy exceeds tol.
GaussianClosure final_gaussian_checks(double tol);

/// Two-point elimination of the c/sqrt(n) term from (n, seq_a(n)) samples;
/// with more than two entries the two largest n are used.
double extrapolate_seq_a(const std::vector<std::pair<long long, double>>& pairs);

}  // namespace grv
