// Microbenchmarks for the hot paths of the norm pipelines: theta evaluation,
// x-averages, lattice rows, and the quadrature building blocks.

#include <benchmark/benchmark.h>

#include "thetalab/eisenstein.hpp"
#include "thetalab/quadrature.hpp"
#include "thetalab/theta.hpp"

using namespace thetalab;

static void BM_theta_direct(benchmark::State& state) {
    HalfPlanePoint z{0.3, 0.8};
    for (auto _ : state) benchmark::DoNotOptimize(theta_direct(z));
}
BENCHMARK(BM_theta_direct);

static void BM_theta_full_moderate(benchmark::State& state) {
    HalfPlanePoint z{0.3, 0.8};
    for (auto _ : state) benchmark::DoNotOptimize(theta_full(z));
}
BENCHMARK(BM_theta_full_moderate);

static void BM_theta_full_small_y(benchmark::State& state) {
    HalfPlanePoint z{0.437, 1e-4};
    for (auto _ : state) benchmark::DoNotOptimize(theta_full(z));
}
BENCHMARK(BM_theta_full_small_y);

static void BM_f_invariant(benchmark::State& state) {
    HalfPlanePoint z{-0.21, 1.7};
    for (auto _ : state) benchmark::DoNotOptimize(f_invariant(z));
}
BENCHMARK(BM_f_invariant);

static void BM_x_average(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(x_average(0.2, 1e-9));
}
BENCHMARK(BM_x_average);

static void BM_eisenstein_box(benchmark::State& state) {
    EisensteinParams params;
    params.truncation = state.range(0);
    HalfPlanePoint z{0.0, 2.0};
    for (auto _ : state) benchmark::DoNotOptimize(eisenstein_truncated(z, params));
}
BENCHMARK(BM_eisenstein_box)->Arg(400)->Arg(2000);

static void BM_tile_integrand_cusp_half(benchmark::State& state) {
    HalfPlanePoint z{0.3, 2.0};
    for (auto _ : state) benchmark::DoNotOptimize(tile_integrand({2, 1}, z));
}
BENCHMARK(BM_tile_integrand_cusp_half);

static void BM_residue_circle(benchmark::State& state) {
    auto f = [](ComplexValue s) { return ip_closed({s, 3, 4.0}); };
    for (auto _ : state) benchmark::DoNotOptimize(residue_at_1(f));
}
BENCHMARK(BM_residue_circle);

static void BM_tile_integral_infinity(benchmark::State& state) {
    QuadratureSpec spec;
    spec.Y = 30.0;
    spec.tol_tile = 1e-5;
    for (auto _ : state) benchmark::DoNotOptimize(tile_integral({0, 1}, spec));
}
BENCHMARK(BM_tile_integral_infinity);

BENCHMARK_MAIN();
