#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "thetalab/common.hpp"
#include "thetalab/integrate.hpp"
#include "thetalab/modular.hpp"
#include "thetalab/quadrature.hpp"
#include "thetalab/theta.hpp"

using namespace thetalab;

namespace {

constexpr double kPi = 3.14159265358979323846;

QuadratureSpec cheap_spec() {
    QuadratureSpec spec;
    spec.Y = 30.0;
    return spec;
}

}  // namespace

TEST_CASE("quadrature spec validation") {
    CHECK_NOTHROW(validate(QuadratureSpec{}));
    QuadratureSpec bad_y;
    bad_y.Y = 1.5;
    CHECK_THROWS_AS(validate(bad_y), std::invalid_argument);
    QuadratureSpec bad_tol;
    bad_tol.tol_tile = 0.5;
    CHECK_THROWS_AS(validate(bad_tol), std::invalid_argument);
    bad_tol.tol_tile = 1e-15;
    CHECK_THROWS_AS(validate(bad_tol), std::invalid_argument);
    QuadratureSpec bad_sub;
    bad_sub.max_subdivisions = 10;
    CHECK_THROWS_AS(validate(bad_sub), std::invalid_argument);
}

TEST_CASE("tile integrand closed forms at fixed points") {
    CHECK(tile_integrand({0, 1}, {0.0, 1.0}) ==
          doctest::Approx(1.0074837203450847062).epsilon(1e-12));
    CHECK(tile_integrand({1, 2}, {0.0, 2.0}) ==
          doctest::Approx(f_invariant({0.5, 0.5})).epsilon(1e-12));
    for (double x : {-0.4, 0.0, 0.3}) {
        CHECK(tile_integrand({2, 1}, {x, 30.0}) <= 1e-6);  // theta vanishes at the cusp 1/2
    }
    CHECK_THROWS_AS(tile_integrand({3, 1}, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("tile closed forms equal F(rep z) pointwise") {
    CosetTable table = coset_reps(4);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ux(-0.5, 0.5);
    std::uniform_real_distribution<double> uy(1.0, 6.0);
    for (std::size_t t = 0; t < table.reps.size(); ++t) {
        for (int k = 0; k < 50; ++k) {
            HalfPlanePoint z{ux(rng), uy(rng)};
            double via_label = tile_integrand(table.labels[t], z);
            double via_rep = f_invariant(moebius_apply(table.reps[t], z));
            CHECK(std::abs(via_label - via_rep) <= 1e-10 * std::max(1.0, via_rep));
        }
    }
}

TEST_CASE("tail correction formula") {
    CHECK(tail_correction(100.0) == 0.6);
    CHECK(tail_correction(25.0) == doctest::Approx(1.2).epsilon(1e-15));
    CHECK_THROWS_AS(tail_correction(1.0), std::invalid_argument);
}

TEST_CASE("tile integrals at Y = 30 match frozen references") {
    // frozen from an independent adaptive-quadrature run at tight tolerance
    QuadratureSpec spec = cheap_spec();
    const std::pair<std::int64_t, std::int64_t> labels[] = {{0, 1}, {1, 0}, {1, 1},
                                                            {1, 2}, {1, 3}, {2, 1}};
    const double want[] = {1.68074197, 1.01946064, 0.86462337, 0.70978609, 0.86462337, 0.04850476};
    for (int i = 0; i < 6; ++i) {
        CHECK(std::abs(tile_integral(labels[i], spec) - want[i]) < 5e-7);
    }
}

TEST_CASE("norm_direct totals 2 pi at Y = 30") {
    QuadratureSpec spec = cheap_spec();
    NormReport rep = norm_direct(spec);
    REQUIRE(rep.tile_values.size() == 6);
    for (double v : rep.tile_values) CHECK(v >= 0.0);
    CHECK(rep.Y_used == 30.0);
    CHECK(rep.tail_correction == tail_correction(30.0));
    double sum = rep.tail_correction;
    for (double v : rep.tile_values) sum += v;
    CHECK(std::abs(rep.total - sum) < 1e-12);
    CHECK(std::abs(rep.ratio_to_pi - rep.total / kPi) < 1e-15);
    // the (1:1) and (1:3) tiles are complex-conjugate mirrors
    CHECK(std::abs(rep.tile_values[2] - rep.tile_values[4]) < 2e-7);
    CHECK(std::abs(rep.total - 2.0 * kPi) < 2e-6);
}

TEST_CASE("truncation height only moves the total within the stated slack") {
    QuadratureSpec spec30 = cheap_spec();
    QuadratureSpec spec60 = cheap_spec();
    spec60.Y = 60.0;
    double t30 = norm_direct(spec30).total;
    double t60 = norm_direct(spec60).total;
    CHECK(std::abs(t30 - t60) <= 2.0 * 6.0 * spec30.tol_tile + 10.0 * std::exp(-kPi * 30.0));
}

TEST_CASE("norm_direct is reproducible across worker counts") {
    QuadratureSpec spec = cheap_spec();
    set_thread_budget(1);
    NormReport one = norm_direct(spec);
    set_thread_budget(3);
    NormReport three = norm_direct(spec);
    set_thread_budget(0);
    CHECK(one.total == three.total);  // fixed chunking makes this bitwise
    CHECK(one.tile_values == three.tile_values);
}

TEST_CASE("cusp-0 tiles rescale exactly to one long period") {
    // sum_k int_{|x|<=1/2} F((x+k+8i)/4) dx = int_0^4 F((x+8i)/4) dx
    auto g = [](double u) { return f_invariant({u, 2.0}); };
    double lhs = 0.0;
    for (int k = 0; k < 4; ++k) {
        lhs += integrate_adaptive([&](double x) { return g((x + k) / 4.0); }, -0.5, 0.5, 1e-12)
                   .value;
    }
    double rhs = integrate_adaptive([&](double x) { return g(x / 4.0); }, 0.0, 4.0, 1e-12).value;
    CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("Fricke pointwise identity") {
    CHECK(fricke_pointwise_check(3, {0.0, 1.0}) <= 1e-10 * f_invariant({0.0, 1.0}));
    CHECK(fricke_pointwise_check(5, {0.3, 0.7}) <= 1e-10 * f_invariant({0.3, 0.7}));
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> ux(-1.0, 1.0);
    std::uniform_real_distribution<double> uy(std::log(0.1), std::log(5.0));
    const int primes[] = {3, 5, 7};
    for (int k = 0; k < 50; ++k) {
        HalfPlanePoint z{ux(rng), std::exp(uy(rng))};
        int p = primes[k % 3];
        CHECK(fricke_pointwise_check(p, z) <= 1e-10 * f_invariant(z));
    }
    CHECK_THROWS_AS(fricke_pointwise_check(4, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("G_p at z = i/p^2 unwinds to |theta(i)|^2 / p") {
    double theta_i_sq = std::norm(theta_direct({0.0, 1.0}));
    for (int p : {3, 5}) {
        HalfPlanePoint z{0.0, 1.0 / double(p * p)};
        double gp = std::sqrt(z.y) * std::norm(theta_full({double(p * p) * z.x,
                                                           double(p * p) * z.y}));
        CHECK(gp == doctest::Approx(theta_i_sq / p).epsilon(1e-12));
    }
}

TEST_CASE("index scaling degenerates to ratio 1 at p = 1") {
    QuadratureSpec spec = cheap_spec();
    double ratio = index_scaling_check(1, spec);
    CHECK(std::abs(ratio - 1.0) < 1e-3);
    CHECK_THROWS_AS(index_scaling_check(2, spec), std::invalid_argument);
    CHECK_THROWS_AS(index_scaling_check(5, spec), std::invalid_argument);
}
