#include "thetalab/quadrature.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "thetalab/integrate.hpp"
#include "thetalab/theta.hpp"

namespace thetalab {

namespace {

constexpr double kPi = std::numbers::pi;

// int_{-1/2}^{1/2} int_{sqrt(1-x^2)}^{Y} g(x+iy) / y^2 dy dx: the level-1
// fundamental domain truncated at height Y, against the hyperbolic measure.
double domain_integral(const std::function<double(const HalfPlanePoint&)>& g, double Y,
                       double tol, long max_evals) {
    auto outer = [&](double x) {
        double ylow = std::sqrt(std::max(0.0, 1.0 - x * x));
        auto inner = [&](double y) { return g(HalfPlanePoint{x, y}) / (y * y); };
        return integrate_adaptive(inner, ylow, Y, 0.25 * tol, max_evals).value;
    };
    return integrate_adaptive(outer, -0.5, 0.5, 0.5 * tol, max_evals).value;
}

}  // namespace

void validate(const QuadratureSpec& spec) {
    if (!(spec.Y >= 2.0)) throw std::invalid_argument("QuadratureSpec: Y must be >= 2");
    for (double tol : {spec.tol_tile, spec.tol_ip})
        if (!(tol >= 1e-14 && tol <= 1e-2))
            throw std::invalid_argument("QuadratureSpec: tolerances must lie in [1e-14, 1e-2]");
    if (spec.max_subdivisions < 100)
        throw std::invalid_argument("QuadratureSpec: max_subdivisions too small");
}

double tile_integrand(std::pair<std::int64_t, std::int64_t> label, const HalfPlanePoint& z) {
    auto [c, d] = label;
    if (c == 0 && d == 1) return f_invariant(z);
    if (c == 1 && d >= 0 && d <= 3)
        return f_invariant(HalfPlanePoint{(z.x + double(d)) / 4.0, z.y / 4.0});
    if (c == 2 && d == 1) return f_invariant(moebius_apply(UniModMatrix{1, 0, 2, 1}, z));
    throw std::invalid_argument("tile_integrand: label is not a point of P^1(Z/4)");
}

double tile_integral(std::pair<std::int64_t, std::int64_t> label, const QuadratureSpec& spec) {
    validate(spec);
    auto g = [&label](const HalfPlanePoint& z) { return tile_integrand(label, z); };
    return domain_integral(g, spec.Y, spec.tol_tile, 15 * spec.max_subdivisions);
}

double tail_correction(double Y) {
    if (!(Y >= 2.0)) throw std::invalid_argument("tail_correction: Y must be >= 2");
    return 6.0 / std::sqrt(Y);
}

NormReport norm_direct(const QuadratureSpec& spec) {
    validate(spec);
    CosetTable table = coset_reps(4);
    NormReport report;
    report.tile_values = parallel_map(int(table.labels.size()), [&](int i) {
        return tile_integral(table.labels[std::size_t(i)], spec);
    });
    report.tail_correction = tail_correction(spec.Y);
    KbnAccumulator total;
    for (double v : report.tile_values) total.add(v);
    total.add(report.tail_correction);
    report.total = total.value();
    report.ratio_to_pi = report.total / kPi;
    report.Y_used = spec.Y;
    return report;
}

double fricke_pointwise_check(int p, const HalfPlanePoint& z) {
    if (!is_odd_prime(p)) throw std::invalid_argument("fricke_pointwise_check: p must be an odd prime");
    const double p2 = double(p) * double(p);
    HalfPlanePoint w = moebius_apply(MoebiusMap::fricke(4.0 * p2), z);
    HalfPlanePoint pw{p2 * w.x, p2 * w.y};
    double gp = std::sqrt(w.y) * std::norm(theta_full(pw, 1e-13));
    return std::abs(gp - f_invariant(z) / double(p));
}

double index_scaling_check(int p, const QuadratureSpec& spec) {
    validate(spec);
    if (p != 1 && p != 3)
        throw std::invalid_argument(
            "index_scaling_check: supported p are 3 and the degenerate p = 1");
    const std::int64_t N = 4 * std::int64_t(p) * std::int64_t(p);
    CosetTable table = coset_reps(N);
    const double Yp = 20.0;
    const double tol = 1e-5;  // loose: the contract on the ratio is 5%

    // Per-tile truncation tails by the cusp class of the rep's bottom-left
    // entry mod 4: the constant term of F at the tile's cusp integrates to
    // 2/sqrt(Y) (cusp infinity), 1/sqrt(Y) (cusp 0), or 0 (cusp 1/2, where
    // theta vanishes).
    auto rep_tail = [Yp](const UniModMatrix& rep) {
        std::int64_t c4 = ((rep.c % 4) + 4) % 4;
        if (c4 == 0) return 2.0 / std::sqrt(Yp);
        if (c4 == 2) return 0.0;
        return 1.0 / std::sqrt(Yp);
    };

    std::vector<double> tiles = parallel_map(int(table.reps.size()), [&](int i) {
        const UniModMatrix rep = table.reps[std::size_t(i)];
        auto g = [&rep](const HalfPlanePoint& z) { return f_invariant(moebius_apply(rep, z)); };
        return domain_integral(g, Yp, tol, 15 * spec.max_subdivisions) + rep_tail(rep);
    });
    KbnAccumulator total;
    for (double v : tiles) total.add(v);
    return total.value() / norm_direct(spec).total;
}

}  // namespace thetalab
