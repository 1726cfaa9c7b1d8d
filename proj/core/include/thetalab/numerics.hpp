#pragma once

// Special functions and summation utilities:
//   gamma  - complex Gamma via a shifted Stirling series with Bernoulli
//            coefficients, reflection for Re z < 1/2
//   zeta   - complex Riemann zeta via Borwein's accelerated alternating
//            (eta) series, reflection for Re s < 1/2
//   compensated_sum / KbnAccumulator - Kahan-Babuska-Neumaier summation
//   zeta_shifted_laurent - Laurent data of zeta(2s-1) at s = 1
//
// Accuracy contracts (checked by tests): gamma <= 1e-12 relative for
// |z| <= 50, |Im z| <= 50 away from poles; zeta <= 1e-12 relative for
// Re s > -2, |Im s| <= 50, away from s = 1.

#include <span>

#include "thetalab/common.hpp"

namespace thetalab {

// Laurent expansion bookkeeping for a simple pole:
//   f(s) = residue/(s - s0) + constant_term + O(s - s0)
struct LaurentData {
    int pole_order = 1;
    double residue = 0.0;
    double constant_term = 0.0;
};

// Gamma function.  Throws pole_error if z is within 1e-14 of a nonpositive
// integer.
ComplexValue gamma(ComplexValue z);

// log Gamma on Re z > 0 (principal branch on the positive half-plane).
ComplexValue log_gamma(ComplexValue z);

// Riemann zeta.  Throws pole_error if |s - 1| < 1e-12.
ComplexValue zeta(ComplexValue s);

// Pole data of s |-> zeta(2s - 1) at s = 1: simple pole, residue 1/2
// (the substitution w = 2s - 1 halves the residue of zeta at w = 1),
// constant term = Euler-Mascheroni.
LaurentData zeta_shifted_laurent();

// Neumaier-compensated running sum; immune to the classic
// [1e16, 1, -1e16] cancellation failure of plain Kahan.
class KbnAccumulator {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Compensated sum of a term sequence; error within a couple of ulps of the
// exact value regardless of intermediate cancellation.
ComplexValue compensated_sum(std::span<const ComplexValue> terms);
double compensated_sum(std::span<const double> terms);

}  // namespace thetalab
