#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "grv/errors.hpp"
#include "grv/kahan.hpp"

namespace grv {

/// Outcome of one quadrature call.
template <typename T>
struct QuadResult {
    T value{};
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;

    /// Returns *this, or throws QuadratureNotConvergedError.
    const QuadResult& require_converged(const char* what = "quadrature") const {
        if (!converged) {
            throw QuadratureNotConvergedError(
                std::string(what) + ": error estimate " + std::to_string(error_estimate) +
                    " above tolerance after " + std::to_string(evaluations) + " evaluations",
                error_estimate, evaluations);
        }
        return *this;
    }
};

/// Parameter values at which initial panel boundaries are forced. Used to
/// pre-split around the sharp ridges the arc integrand develops near
/// v = pi/4 and 3pi/4.
struct RefinementSeed {
    std::vector<double> locations;
};

struct QuadOptions {
    double tol = 1e-10;  // absolute
    std::size_t max_evaluations = 1'000'000;
};

namespace detail {

// 15-point Kronrod nodes with the embedded 7-point Gauss rule (QUADPACK
// dqk15 constants). Nodes are symmetric about the panel center.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double abs_of(double x) noexcept { return std::abs(x); }
inline double abs_of(std::complex<double> x) noexcept { return std::abs(x); }

template <typename T>
struct Panel {
    double a, b;
    T value{};
    double err = 0.0;
    double resabs = 0.0;
    std::size_t seq = 0;  // creation order, breaks heap ties deterministically
};

// Ordering for the refinement heap: largest error first.
template <typename T>
struct PanelWorse {
    bool operator()(const Panel<T>& x, const Panel<T>& y) const noexcept {
        if (x.err != y.err) return x.err < y.err;
        return x.seq > y.seq;
    }
};

// G7/K15 on [a,b]. The error estimate follows QUADPACK: the raw |K15-G7|
// difference is damped through the scaled-deviation norm and floored at the
// rounding level of the panel.
template <typename T, typename F>
Panel<T> eval_panel(F&& f, double a, double b, std::size_t& evaluations) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    T fv[15];
    double x[15];
    for (int i = 0; i < 7; ++i) {
        x[2 * i] = c - h * kXgk[i];
        x[2 * i + 1] = c + h * kXgk[i];
    }
    x[14] = c;
    for (int i = 0; i < 15; ++i) {
        fv[i] = f(x[i]);
        ++evaluations;
        if (!std::isfinite(abs_of(fv[i]))) {
            throw NonFiniteSampleError("integrand returned a non-finite value", x[i]);
        }
    }

    T resk{};
    T resg{};
    double resabs = 0.0;
    for (int i = 0; i < 7; ++i) {
        const T pair = fv[2 * i] + fv[2 * i + 1];
        resk = resk + kWgk[i] * pair;
        resabs += kWgk[i] * (abs_of(fv[2 * i]) + abs_of(fv[2 * i + 1]));
        if (i % 2 == 1) {
            resg = resg + kWg[(i - 1) / 2] * pair;
        }
    }
    resk = resk + kWgk[7] * fv[14];
    resg = resg + kWg[3] * fv[14];
    resabs += kWgk[7] * abs_of(fv[14]);

    const T reskh = 0.5 * resk;
    double resasc = 0.0;
    for (int i = 0; i < 7; ++i) {
        resasc += kWgk[i] * (abs_of(fv[2 * i] - reskh) + abs_of(fv[2 * i + 1] - reskh));
    }
    resasc += kWgk[7] * abs_of(fv[14] - reskh);

    Panel<T> p;
    p.a = a;
    p.b = b;
    p.value = h * resk;
    p.resabs = h * resabs;
    resasc *= h;

    double err = abs_of(resk - resg) * h;
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    const double eps = std::numeric_limits<double>::epsilon();
    err = std::max(err, 50.0 * eps * p.resabs);
    p.err = err;
    return p;
}

template <typename T, typename F>
QuadResult<T> integrate_adaptive_impl(F&& f, double a, double b, const QuadOptions& opts,
                                      const RefinementSeed& seeds) {
    if (!(a < b)) {
        throw Error("integrate_adaptive: requires a < b");
    }
    if (!(opts.tol > 0.0)) {
        throw Error("integrate_adaptive: tolerance must be positive");
    }

    std::vector<double> cuts{a, b};
    for (double s : seeds.locations) {
        if (!(s > a) || !(s < b)) {
            throw Error("refinement seed outside the integration interval");
        }
        cuts.push_back(s);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::size_t evaluations = 0;
    std::size_t next_seq = 0;
    std::vector<Panel<T>> heap;
    heap.reserve(64);
    double total_err = 0.0;

    auto push = [&](Panel<T> p) {
        p.seq = next_seq++;
        total_err += p.err;
        heap.push_back(std::move(p));
        std::push_heap(heap.begin(), heap.end(), PanelWorse<T>{});
    };

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        push(eval_panel<T>(f, cuts[i], cuts[i + 1], evaluations));
    }

    const double eps = std::numeric_limits<double>::epsilon();
    auto exact_total = [&heap]() {
        KahanSum s;
        for (const auto& p : heap) {
            s.add(std::abs(p.err));
        }
        return s.value();
    };
    bool refinable = true;
    while (refinable) {
        while (total_err > opts.tol && evaluations + 30 <= opts.max_evaluations) {
            std::pop_heap(heap.begin(), heap.end(), PanelWorse<T>{});
            Panel<T> worst = heap.back();
            heap.pop_back();

            if (worst.err <= 0.0) {
                // Every remaining panel is frozen or exact.
                heap.push_back(std::move(worst));
                std::push_heap(heap.begin(), heap.end(), PanelWorse<T>{});
                refinable = false;
                break;
            }

            const double mid = 0.5 * (worst.a + worst.b);
            const double width_floor =
                eps * std::max({std::abs(worst.a), std::abs(worst.b), 1.0});
            if (mid <= worst.a || mid >= worst.b || worst.b - worst.a < 4.0 * width_floor) {
                // Panel at rounding width; park it with its error frozen. The
                // negative err keeps it at the heap bottom while total_err
                // still counts its (positive) contribution.
                worst.err = -worst.err;
                heap.push_back(std::move(worst));
                std::push_heap(heap.begin(), heap.end(), PanelWorse<T>{});
                continue;
            }

            total_err -= worst.err;
            push(eval_panel<T>(f, worst.a, mid, evaluations));
            push(eval_panel<T>(f, mid, worst.b, evaluations));
        }
        // The running total drifts a little; resume if an exact recount
        // disagrees about convergence and budget remains.
        total_err = exact_total();
        if (total_err <= opts.tol || evaluations + 30 > opts.max_evaluations) {
            break;
        }
    }

    // Deterministic final accumulation: sum panels in interval order with
    // compensation, absolute values for the error.
    std::sort(heap.begin(), heap.end(),
              [](const Panel<T>& x, const Panel<T>& y) { return x.a < y.a; });
    QuadResult<T> out;
    KahanSum err_sum;
    if constexpr (std::is_same_v<T, double>) {
        KahanSum v;
        for (const auto& p : heap) {
            v.add(p.value);
            err_sum.add(std::abs(p.err));
        }
        out.value = v.value();
    } else {
        KahanSum vr, vi;
        for (const auto& p : heap) {
            vr.add(p.value.real());
            vi.add(p.value.imag());
            err_sum.add(std::abs(p.err));
        }
        out.value = T{vr.value(), vi.value()};
    }
    out.error_estimate = err_sum.value();
    out.evaluations = evaluations;
    out.converged = out.error_estimate <= opts.tol;
    return out;
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of a real-valued integrand over [a,b].
/// Bisects the worst panel until the summed error estimate meets tol or the
/// evaluation budget runs out (QuadResult::converged reports which).
template <typename F>
QuadResult<double> integrate_adaptive(F&& f, double a, double b,
                                      const QuadOptions& opts = QuadOptions{},
                                      const RefinementSeed& seeds = RefinementSeed{}) {
    return detail::integrate_adaptive_impl<double>(std::forward<F>(f), a, b, opts, seeds);
}

/// Same engine for complex-valued integrands; both components share panels
/// and one error estimate.
template <typename F>
QuadResult<std::complex<double>> integrate_adaptive_complex(
    F&& f, double a, double b, const QuadOptions& opts = QuadOptions{},
    const RefinementSeed& seeds = RefinementSeed{}) {
    return detail::integrate_adaptive_impl<std::complex<double>>(std::forward<F>(f), a, b, opts,
                                                                 seeds);
}

/// Integral of f over [0, inf) via the rational stretch x = t/(1-t).
/// The integrand must decay at least like a decaying exponential of a power;
/// two far-field samples gate that assumption before any panel work.
template <typename F>
QuadResult<double> integrate_semi_infinite(F&& f, const QuadOptions& opts = QuadOptions{}) {
    for (double probe : {1e3, 1e6}) {
        const double tail = f(probe);
        if (!std::isfinite(tail)) {
            throw NonFiniteSampleError("semi-infinite integrand non-finite in the tail", probe);
        }
        if (std::abs(tail) * probe > opts.tol) {
            throw DecayAssumptionViolatedError(
                "semi-infinite integrand decays too slowly: |f(" + std::to_string(probe) +
                ")| = " + std::to_string(std::abs(tail)));
        }
    }
    auto mapped = [&f](double t) {
        const double om = 1.0 - t;
        return f(t / om) / (om * om);
    };
    QuadResult<double> r = detail::integrate_adaptive_impl<double>(mapped, 0.0, 1.0, opts,
                                                                   RefinementSeed{{0.5}});
    r.evaluations += 2;  // the decay probes
    return r;
}

/// Whole-line integral of an even integrand: twice the half-line value.
template <typename F>
QuadResult<double> integrate_even_real_line(F&& f, const QuadOptions& opts = QuadOptions{}) {
    QuadOptions half = opts;
    half.tol = 0.5 * opts.tol;
    QuadResult<double> r = integrate_semi_infinite(std::forward<F>(f), half);
    r.value *= 2.0;
    r.error_estimate *= 2.0;
    r.converged = r.error_estimate <= opts.tol;
    return r;
}

}  // namespace grv
