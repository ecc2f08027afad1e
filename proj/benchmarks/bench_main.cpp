#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "grv/contour_verify.hpp"
#include "grv/quadrature.hpp"
#include "grv/sequences_series.hpp"
#include "grv/stable_eval.hpp"

namespace {

void BM_FermiFromSquare(benchmark::State& state) {
    std::complex<double> w{1.3, -2.7};
    for (auto _ : state) {
        benchmark::DoNotOptimize(grv::detail::fermi_from_square(w));
        w += std::complex<double>{1e-9, 1e-9};
    }
}
BENCHMARK(BM_FermiFromSquare);

void BM_SegmentIntegral(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(grv::segment_integral(n, 1e-10));
    }
}
BENCHMARK(BM_SegmentIntegral)->Arg(1)->Arg(5)->Arg(10);

void BM_ArcIntegral(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(grv::arc_integral(n, 1e-10));
    }
}
BENCHMARK(BM_ArcIntegral)->Arg(1)->Arg(5)->Arg(10)->Arg(64);

void BM_GaussKronrodSin(benchmark::State& state) {
    grv::QuadOptions opts;
    opts.tol = 1e-12;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            grv::integrate_adaptive([](double x) { return std::sin(x); }, 0.0, 3.0, opts));
    }
}
BENCHMARK(BM_GaussKronrodSin);

void BM_EtaAccelerated(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(grv::eta_accelerated(0.5, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_EtaAccelerated)->Arg(20)->Arg(40)->Arg(80);

void BM_EtaDirectPartialSums(benchmark::State& state) {
    const long long terms = state.range(0);
    for (auto _ : state) {
        double sum = 0.0;
        for (long long k = 1; k <= terms; ++k) {
            const double t = 1.0 / std::sqrt(static_cast<double>(k));
            sum += (k % 2 == 1) ? t : -t;
        }
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_EtaDirectPartialSums)->Arg(1000)->Arg(100000)->Arg(10000000);

void BM_IdentityScan(benchmark::State& state) {
    const long long n_max = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(grv::max_identity_residuals(n_max));
    }
}
BENCHMARK(BM_IdentityScan)->Arg(1000)->Arg(10000);

void BM_TailIntegral(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(grv::tail_b(n, 1e-10));
    }
}
BENCHMARK(BM_TailIntegral)->Arg(1)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
