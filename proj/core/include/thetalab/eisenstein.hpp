#pragma once

// The nonholomorphic Eisenstein series for Gamma_0(N) as a truncated lattice
// sum with a proven tail bound, its residue at s = 1 (exact index formula and
// numerical extrapolation), and the weighted integral
//   I_p(s) = int_0^inf y^(s-3/2) (A(y) - A(p^2 y)) dy
// evaluated both in closed form and by direct quadrature, plus the contour
// residue machinery that turns I_p into a norm value.

#include <cstdint>
#include <functional>
#include <string>

#include "thetalab/modular.hpp"
#include "thetalab/quadrature.hpp"

namespace thetalab {

struct EisensteinParams {
    std::int64_t level = 4;
    ComplexValue s = 3.0;
    std::int64_t truncation = 4000;  // box cutoff on |c| and |d|
};

// Parameters of the closed form of I_p(s).  The Fourier constant c is always
// a parameter (normally the fitted value), never baked in.
struct ClosedFormParams {
    ComplexValue s = 2.0;
    int p = 3;
    double c = 4.0;
};

struct ResidueEstimate {
    double value = 0.0;
    std::string method;        // "circle" or "richardson"
    double error_bound = 0.0;  // always positive
};

struct EisensteinValue {
    ComplexValue value;
    double tail_bound;  // overestimate of the omitted lattice tail
};

// Half-sum over coprime pairs (c,d), N | c, |c|,|d| <= truncation, of
// y^s / |cz+d|^(2s); includes the (0:+-1) term contributing y^s.  Requires
// Re s > 1 + 1e-9 (throws std::domain_error otherwise).
//
// Convention: the sum ranges over cosets of the stabilizer of infinity taken
// to include -I, so (c,d) and (-c,-d) are identified and each class is
// counted once (hence "half-sum").  Every downstream quantity depends only on
// |cz+d|, so the other convention would just rescale by 2 everywhere.
EisensteinValue eisenstein_truncated(const HalfPlanePoint& z, const EisensteinParams& params);

// Exact residue of E_N(z,s) at s = 1: 3 / (pi * index_gamma0(N)), i.e. the
// reciprocal hyperbolic covolume.
double eisenstein_residue_formula(std::int64_t N);

// Richardson extrapolation of (s-1) E_N(z,s) to s = 1 from the geometric
// nodes s in {1.5, 1.25, 1.125}, each lattice sum extrapolated in the cutoff
// first.  Loose-precision corroboration of the residue formula (few percent);
// error_bound combines the extrapolation defect with the measured cutoff
// sensitivity.  Requires Im z >= 1.
ResidueEstimate eisenstein_residue_numeric(const HalfPlanePoint& z, std::int64_t N,
                                           std::int64_t base_cutoff = 4000);

// c * (4 pi)^(1/2-s) * Gamma(s-1/2) * (1 - p^(1-2s)) * zeta(2s-1), the
// closed form of I_p(s) with the leading constant as the parameter c.
// Defined by analytic continuation away from the poles (s = 1 from zeta,
// s - 1/2 a nonpositive integer from Gamma); pole_error near those.
ComplexValue ip_closed(const ClosedFormParams& params);

// Same product without the Euler factor (1 - p^(1-2s)).
ComplexValue ip_closed_full(ComplexValue s, double c);

// Direct quadrature of I_p(s) with A(y) measured by the theta engine
// (independent of any Fourier-constant assumption).  Real s in [1.5, 4];
// absolute error <= quad.tol_ip.
double ip_direct(const ClosedFormParams& params, const QuadratureSpec& quad);

// Discrete circle average (1/n) sum f(s_k) (s_k - 1) over s_k on the circle
// |s - 1| = radius: the residue at 1, exponentially accurate in n_points for
// f analytic up to the simple pole.  radius in [0.1, 0.4], n_points >= 16.
ResidueEstimate residue_at_1(const std::function<ComplexValue(ComplexValue)>& f,
                             double radius = 0.25, int n_points = 32);

// 2 pi * residue_at_1(ip_closed(., p, c)) / (1 - 1/p): the norm value forced
// by equating the residue chain with the covolume residue.  Algebraically
// pi c / 2, independent of p.
double norm_from_residue(int p, double c);

}  // namespace thetalab
