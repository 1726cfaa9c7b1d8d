#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "thetalab/modular.hpp"
#include "thetalab/theta.hpp"

using namespace thetalab;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel_err(ComplexValue got, ComplexValue want) {
    return std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST_CASE("theta at reference points") {
    // references computed with 50-digit arithmetic and rounded to binary64
    CHECK(std::abs(theta_direct({0.0, 1.0}).real() - 1.003734885487739091) < 1e-14);
    CHECK(std::abs(theta_direct({0.0, 1.0}).imag()) < 1e-15);
    CHECK(std::abs(theta_full({0.0, 0.25}).real() - 1.4194954880837661234) < 1e-13);
    // theta(i/4) = sqrt(2) theta(i)
    CHECK(rel_err(theta_full({0.0, 0.25}), std::sqrt(2.0) * theta_direct({0.0, 1.0})) < 1e-13);
    // theta(i/400) = sqrt(200) theta(100 i), and theta(100 i) = 1 + 2e^(-200 pi)
    CHECK(rel_err(theta_full({0.0, 0.0025}), std::sqrt(200.0)) < 1e-12);
}

TEST_CASE("theta series is exactly periodic in x") {
    // dyadic x, so the shifted coordinate is exactly representable and the
    // internal mod-1 reduction reproduces it bitwise
    HalfPlanePoint z{0.3125, 0.9};
    CHECK(theta_direct({z.x + 1.0, z.y}) == theta_direct(z));
    CHECK(theta_direct({z.x - 3.0, z.y}) == theta_direct(z));
    CHECK(rel_err(theta_full({z.x + 1.0, z.y}), theta_full(z)) < 1e-13);
    // non-dyadic shifts agree to rounding of the shifted coordinate
    CHECK(rel_err(theta_direct({0.3 + 1.0, 0.9}), theta_direct({0.3, 0.9})) < 1e-14);
}

TEST_CASE("theta_full agrees with the raw series where both are valid") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ux(-2.0, 2.0);
    std::uniform_real_distribution<double> uy(std::log(0.06), std::log(20.0));
    for (int k = 0; k < 100; ++k) {
        HalfPlanePoint z{ux(rng), std::exp(uy(rng))};
        // |theta| dips below 0.1 near the cusp-1/2 line, so run both paths
        // at the tolerance floor to keep the comparison relative
        CHECK(rel_err(theta_full(z, 1e-15), theta_direct(z, 1e-15)) < 1e-12);
    }
}

TEST_CASE("theta argument validation") {
    CHECK_THROWS_AS(theta_direct({0.0, 0.01}), std::domain_error);
    CHECK_THROWS_AS(theta_direct({0.0, 1.0}, 1e-16), std::invalid_argument);
    CHECK_THROWS_AS(theta_full({0.0, 1.0}, 1e-16), std::invalid_argument);
    CHECK_NOTHROW(theta_full({0.0, 1e-5}));
}

TEST_CASE("transformation law theta(-1/(4z)) = sqrt(2z/i) theta(z)") {
    const HalfPlanePoint pts[] = {{0.3, 0.8}, {-0.45, 0.12}, {1.7, 2.5}, {0.0, 0.03}};
    for (const HalfPlanePoint& z : pts) {
        ComplexValue zc = z.to_complex();
        HalfPlanePoint w = moebius_apply(MoebiusMap::fricke(4.0), z);
        ComplexValue lhs = theta_full(w);
        ComplexValue rhs = std::sqrt(2.0 * zc / ComplexValue(0.0, 1.0)) * theta_full(z);
        CHECK(rel_err(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("triple series satisfies the Jacobi quartic identity") {
    const ComplexValue pts[] = {{0.3, 1.1}, {-0.2, 2.0}, {0.05, 0.95}};
    for (ComplexValue w : pts) {
        ThetaTriple t = theta_triple_series(w, 1e-14);
        ComplexValue t2_4 = std::pow(t.t2, 4), t3_4 = std::pow(t.t3, 4), t4_4 = std::pow(t.t4, 4);
        CHECK(std::abs(t3_4 - (t2_4 + t4_4)) < 1e-12 * std::abs(t3_4));
        // theta(z) is the theta3 nullwert at w = 2z
        HalfPlanePoint z{w.real() / 2.0, w.imag() / 2.0};
        CHECK(rel_err(t.t3, theta_direct(z)) < 1e-12);
    }
}

TEST_CASE("reduction trace records the word and the automorphy factor") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ux(-2.0, 2.0);
    std::uniform_real_distribution<double> uy(std::log(1e-3), std::log(5.0));
    for (int k = 0; k < 60; ++k) {
        HalfPlanePoint z{ux(rng), std::exp(uy(rng))};
        ReductionTrace trace;
        theta_full(z, 1e-13, trace);
        // trace.matrix acts on w = 2z and lands in the standard domain
        HalfPlanePoint w{2.0 * z.x, 2.0 * z.y};
        HalfPlanePoint wr = moebius_apply(trace.matrix, w);
        CHECK(std::abs(wr.x) <= 0.5 + 1e-9);
        CHECK(wr.x * wr.x + wr.y * wr.y >= 1.0 - 1e-9);
        // |automorphy factor| = (y_reduced / y_original)^(1/4)
        double want = std::pow(wr.y / w.y, 0.25);
        CHECK(std::abs(std::abs(trace.accumulated_factor) - want) < 1e-10 * want);
        CHECK(trace.inversions >= 0);
    }
    // high in the strip no inversion is needed
    ReductionTrace high;
    theta_full({0.2, 3.0}, 1e-13, high);
    CHECK(high.inversions == 0);
    CHECK(high.permutation_tag == std::array<int, 3>{2, 3, 4});
}

TEST_CASE("x-average at reference heights") {
    CHECK(std::abs(x_average(0.05) - 3.4721373029168078083) < 5e-10);
    CHECK(std::abs(x_average(0.1) - 2.1647328728072897742) < 5e-10);
    CHECK(std::abs(x_average(0.2) - 1.3241825781586462309) < 5e-10);
    CHECK(std::abs(x_average(0.3) - 1.0922175729875170208) < 5e-10);
    CHECK(std::abs(x_average(0.5) - 1.0074697709754781821) < 5e-10);
    CHECK(std::abs(x_average(8.0) - 1.0) < 1e-11);
}

TEST_CASE("x-average shortcut agrees with the full-period integral") {
    for (double y : {0.07, 0.3, 1.0}) {
        CHECK(std::abs(x_average(y) - x_average_full_period(y)) < 3e-11);
    }
    CHECK_THROWS_AS(x_average(-1.0), std::invalid_argument);
}

TEST_CASE("x-average matches its Fourier expansion") {
    // Parseval over one x-period: A(y) = 1 + 4 sum_{n >= 1} e^(-4 pi n^2 y)
    for (double y : {0.08, 0.2, 0.45}) {
        double model = 1.0;
        for (int n = 1; n <= 12; ++n) model += 4.0 * std::exp(-4.0 * kPi * n * n * y);
        CHECK(std::abs(x_average(y) - model) < 1e-10);
    }
}

TEST_CASE("f_invariant is positive and scales like sqrt(y) at high y") {
    CHECK(f_invariant({0.0, 1.0}) == doctest::Approx(1.0074837203450847062).epsilon(1e-12));
    double f30 = f_invariant({0.25, 30.0});
    CHECK(std::abs(f30 - std::sqrt(30.0)) < 1e-10);  // theta -> 1 at the cusp
}

TEST_CASE("fourier constant fit") {
    std::vector<double> grid = {0.05, 0.1, 0.2, 0.3, 0.5};
    FourierFit fit = fit_fourier_constant_detail(grid);
    CHECK(std::abs(fit.c - 4.0) < 1e-9);
    CHECK(fit.residual < 1e-9);
    CHECK(fit_fourier_constant(grid) == fit.c);

    CHECK_THROWS_AS(fit_fourier_constant_detail({0.1, 0.2, 0.3, 0.4}), std::invalid_argument);
    CHECK_THROWS_AS(fit_fourier_constant_detail({0.01, 0.1, 0.2, 0.3, 0.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fit_fourier_constant_detail({0.1, 0.2, 0.3, 0.4, 0.9}),
                    std::invalid_argument);
}
