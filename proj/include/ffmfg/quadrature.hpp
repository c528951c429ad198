#pragma once

#include <functional>

namespace ffmfg {

/// Adaptive Gauss-Kronrod (7-15 pair) integration of f over [a, b] to the
/// given absolute tolerance. Subintervals are bisected until the summed
/// Kronrod-minus-Gauss error estimate fits the budget. Swapped bounds negate
/// the result. Throws std::runtime_error if the estimate cannot be met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12);

}  // namespace ffmfg
