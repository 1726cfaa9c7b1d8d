#pragma once

// Adaptive 1-D quadrature on a Gauss-Kronrod 7/15 pair.  Panels are split
// recursively until the embedded error estimate meets the width-proportional
// share of the requested absolute tolerance; exhausting the evaluation
// budget throws budget_error.  Panel results are accumulated left to right
// with compensated summation, so results are deterministic.

#include <functional>

#include "thetalab/common.hpp"

namespace thetalab {

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

IntegrationResult integrate_adaptive(const std::function<double(double)>& f,
                                     double a, double b, double abs_tol,
                                     long max_evaluations = 2000000);

}  // namespace thetalab
