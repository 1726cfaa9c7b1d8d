#pragma once

// Evaluation of theta(z) = sum_{n in Z} exp(2 pi i n^2 z) on the whole upper
// half-plane, the Gamma_0(4)-invariant F(z) = y^(1/2) |theta(z)|^2, and the
// x-average A(y) = int_0^1 |theta(x+iy)|^2 dx.
//
// Two evaluation paths:
//   theta_direct - raw q-series, fast and valid for y >= 0.05
//   theta_full   - writes theta(z) as the classical theta3 nullwert at
//                  w = 2z, reduces w to the standard domain by shifts and
//                  inversions while tracking the induced permutation of the
//                  triple (theta2, theta3, theta4) and the accumulated
//                  automorphy factor, then sums the rapidly convergent series

#include <array>

#include "thetalab/modular.hpp"
#include "thetalab/numerics.hpp"

namespace thetalab {

// Values of the three classical theta nullwerte at one argument.
struct ThetaTriple {
    ComplexValue t2, t3, t4;
};

// Record of one reduction run: the SL2(Z) word applied to w, the accumulated
// square-root automorphy factor for the tracked slot, and the permutation of
// (2,3,4) induced on the triple.
struct ReductionTrace {
    UniModMatrix matrix = UniModMatrix::identity();
    ComplexValue accumulated_factor = 1.0;
    std::array<int, 3> permutation_tag = {2, 3, 4};
    int inversions = 0;
};

// Evaluates the triple at a reduced argument (|Re w| <= 1/2, |w| >= 1).
ThetaTriple theta_triple_series(ComplexValue w, double tol);

// q-series evaluation; requires y >= 0.05.  The truncation index is the
// least N whose geometric tail bound 2 e^(-2 pi N^2 y)/(1 - e^(-2 pi (2N+1) y))
// is below tol.
ComplexValue theta_direct(const HalfPlanePoint& z, double tol = 1e-13);

// Reduction-based evaluation, valid for every y > 0.
ComplexValue theta_full(const HalfPlanePoint& z, double tol = 1e-13);
ComplexValue theta_full(const HalfPlanePoint& z, double tol, ReductionTrace& trace);

// F(z) = y^(1/2) |theta(z)|^2, invariant under Gamma_0(4) and the Fricke
// involution z -> -1/(4z).
double f_invariant(const HalfPlanePoint& z);

// A(y) = int_0^1 |theta(x+iy)|^2 dx with absolute error <= tol; integrates
// over [0, 1/2] and doubles (theta(-x+iy) = conj theta(x+iy)).
double x_average(double y, double tol = 1e-11);

// Same integral without the symmetry shortcut (kept as a cross-check).
double x_average_full_period(double y, double tol = 1e-11);

// Least-squares fit of the constant c in
//   A(y) = 1 + c * sum_{n >= 1} e^(-4 pi n^2 y)
// over the given y grid (all inside [0.05, 0.5], at least 5 points).
struct FourierFit {
    double c = 0.0;
    double residual = 0.0;
};
FourierFit fit_fourier_constant_detail(const std::vector<double>& y_grid);
double fit_fourier_constant(const std::vector<double>& y_grid);

}  // namespace thetalab
