#pragma once

// Direct evaluation of the hyperbolic norm integral
//   int_{Gamma_0(4)\H} y^(1/2) |theta(z)|^2 dx dy / y^2
// by tiling the quotient with six copies of the level-1 fundamental domain,
// integrating each tile up to height Y, and adding the analytic cusp-tail
// correction 6/sqrt(Y).  Also the pointwise Fricke identity check and the
// index-scaling cross-check against Gamma_0(4 p^2).

#include <cstdint>
#include <utility>
#include <vector>

#include "thetalab/modular.hpp"

namespace thetalab {

// Shared tolerances for every integral in the norm pipeline.
struct QuadratureSpec {
    double Y = 100.0;            // truncation height of the tiled strip
    double tol_tile = 1e-7;      // absolute error budget per tile integral
    double tol_ip = 1e-6;        // absolute error budget for ip_direct
    long max_subdivisions = 200000;
};

// Throws std::invalid_argument unless Y >= 2 and tolerances lie in [1e-14, 1e-2].
void validate(const QuadratureSpec& spec);

// Result of norm_direct: one value per coset tile of Gamma_0(4)\SL2(Z), in
// coset_reps(4) label order (0:1), (1:0), (1:1), (1:2), (1:3), (2:1).
struct NormReport {
    std::vector<double> tile_values;
    double tail_correction = 0.0;
    double total = 0.0;
    double ratio_to_pi = 0.0;
    double Y_used = 0.0;
};

// Integrand of one tile at a point of the level-1 fundamental domain, using
// the cheap rewritten forms: F(z) for (0:1), F((z+k)/4) for (1:k) (high
// imaginary part, fast series), and F(z/(2z+1)) for (2:1).
double tile_integrand(std::pair<std::int64_t, std::int64_t> label, const HalfPlanePoint& z);

// Adaptive 2-D quadrature of the tile integrand over
// {|x| <= 1/2, |z| >= 1, y <= spec.Y} against dmu = dx dy / y^2,
// absolute error <= spec.tol_tile.
double tile_integral(std::pair<std::int64_t, std::int64_t> label, const QuadratureSpec& spec);

// Truncation-tail correction 6 / sqrt(Y): the constant Fourier modes at the
// cusps infinity (2/sqrt(Y)) and 0 (4/sqrt(Y) across the four tiles); the
// cusp-1/2 tail and all non-constant modes are below 10 e^(-pi Y).
double tail_correction(double Y);

// Sum of the six tile integrals plus the tail correction.
NormReport norm_direct(const QuadratureSpec& spec);

// Residual |G_p(-1/(4 p^2 z)) - (1/p) F(z)| with G_p(z) = y^(1/2)|theta(p^2 z)|^2.
// Vanishes identically by the transformation law; the contract is
// residual <= 1e-10 * F(z).
double fricke_pointwise_check(int p, const HalfPlanePoint& z);

// Tiles Gamma_0(4 p^2)\H with coset_reps(4 p^2) at truncation Y' = 20 and
// loose tolerance, and returns the ratio of that integral of F to the
// norm_direct total.  Expected ratio: index ratio p (p + 1).  Supported p:
// 3, and 1 as the degenerate self-tiling (ratio 1).
double index_scaling_check(int p, const QuadratureSpec& spec);

}  // namespace thetalab
