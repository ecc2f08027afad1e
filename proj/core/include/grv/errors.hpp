#pragma once

#include <stdexcept>
#include <string>

namespace grv {

/// Base class for every failure condition raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A real or complex argument contained NaN or an infinity.
class NonFiniteError : public Error {
public:
    using Error::Error;
};

/// Evaluation point closer to a pole of 1/(e^{z^2}+1) than the active guard.
class PoleProximityError : public Error {
public:
    PoleProximityError(const std::string& what, double distance)
        : Error(what), distance_(distance) {}
    double distance() const noexcept { return distance_; }

private:
    double distance_;
};

/// Point failed validation against the pole lattice.
class NotAPoleError : public Error {
public:
    using Error::Error;
};

/// Circle radius reaches into the basin of a neighboring pole.
class RadiusTooLargeError : public Error {
public:
    using Error::Error;
};

/// Contour radius outside the admissible range of the identity being checked.
class RadiusOutOfRangeError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature exhausted its evaluation budget above tolerance.
class QuadratureNotConvergedError : public Error {
public:
    QuadratureNotConvergedError(const std::string& what, double error_estimate,
                                std::size_t evaluations)
        : Error(what), error_estimate_(error_estimate), evaluations_(evaluations) {}
    double error_estimate() const noexcept { return error_estimate_; }
    std::size_t evaluations() const noexcept { return evaluations_; }

private:
    double error_estimate_;
    std::size_t evaluations_;
};

/// Integrand returned NaN or an infinity at a quadrature node.
class NonFiniteSampleError : public Error {
public:
    NonFiniteSampleError(const std::string& what, double location)
        : Error(what), location_(location) {}
    double location() const noexcept { return location_; }

private:
    double location_;
};

/// Tail sample of a semi-infinite integrand too large for the mapped scheme.
class DecayAssumptionViolatedError : public Error {
public:
    using Error::Error;
};

/// A two-sided identity failed to close within tolerance.
class BalanceFailedError : public Error {
public:
    BalanceFailedError(const std::string& what, double discrepancy)
        : Error(what), discrepancy_(discrepancy) {}
    double discrepancy() const noexcept { return discrepancy_; }

private:
    double discrepancy_;
};

/// zeta(s) requested at (or within guard distance of) the s = 1 pole.
class PoleAtOneError : public Error {
public:
    using Error::Error;
};

/// Extrapolation nodes coincide.
class DegenerateNodesError : public Error {
public:
    using Error::Error;
};

/// A computed value exceeded its proven bound.
class BoundViolatedError : public Error {
public:
    BoundViolatedError(const std::string& what, double value, double bound)
        : Error(what), value_(value), bound_(bound) {}
    double value() const noexcept { return value_; }
    double bound() const noexcept { return bound_; }

private:
    double value_;
    double bound_;
};

/// Suite name not recognized by run_suite.
class UnknownSuiteError : public Error {
public:
    using Error::Error;
};

/// Series kind not recognized by emit_series.
class UnknownKindError : public Error {
public:
    using Error::Error;
};

/// Override key/value rejected (non-positive tolerance, bad n_max, ...).
class InvalidOverrideError : public Error {
public:
    using Error::Error;
};

/// Output destination could not be written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace grv
