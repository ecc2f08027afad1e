#pragma once

#include <cmath>
#include <complex>

#include "grv/errors.hpp"

namespace grv {

/// A validated point in the complex plane. Construction rejects NaN and
/// infinities, so any ComplexPoint in flight is finite.
struct ComplexPoint {
    double re = 0.0;
    double im = 0.0;

    ComplexPoint() = default;

    ComplexPoint(double real, double imag) : re(real), im(imag) {
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw NonFiniteError("ComplexPoint: non-finite component");
        }
    }

    static ComplexPoint from(std::complex<double> z) { return {z.real(), z.imag()}; }

    std::complex<double> cx() const noexcept { return {re, im}; }

    double abs() const noexcept { return std::hypot(re, im); }

    ComplexPoint conj() const noexcept {
        ComplexPoint p;
        p.re = re;
        p.im = -im;
        return p;
    }

    friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;
};

/// Knobs governing numerically safe evaluation of the integrands.
class EvalPolicy {
public:
    /// overflow_threshold: exponent magnitude above which e^w must not be
    /// formed directly. pole_guard: minimum distance from the pole lattice
    /// below which evaluation is refused.
    explicit EvalPolicy(double overflow_threshold = 700.0, double pole_guard = 1e-8)
        : overflow_threshold_(overflow_threshold), pole_guard_(pole_guard) {
        if (!(overflow_threshold > 0.0) || !(pole_guard > 0.0)) {
            throw Error("EvalPolicy: thresholds must be positive");
        }
    }

    double overflow_threshold() const noexcept { return overflow_threshold_; }
    double pole_guard() const noexcept { return pole_guard_; }

private:
    double overflow_threshold_;
    double pole_guard_;
};

}  // namespace grv
