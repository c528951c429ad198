#pragma once

#include <functional>
#include <vector>

#include "ffmfg/grid.hpp"
#include "ffmfg/models.hpp"

namespace ffmfg {

/// Smooth periodic data for the linear-Hamiltonian case, where the coupled
/// system decouples into a transported density and an explicitly integrable
/// value function.
struct LinearCaseData {
  std::function<double(double)> u0;  ///< initial value function, period `length`
  std::function<double(double)> m0;  ///< initial density, positive, period `length`
  Coupling g = Coupling::Identity;
  double length = 1.0;
};

/// u(x, t) = u0(x - t) + (1/2) Integral_{x-t}^{x+t} g(m0(s)) ds, with u0 and
/// m0 read modulo the torus length and the integral evaluated by adaptive
/// quadrature to 1e-12 absolute.
double linear_u(const LinearCaseData& data, double x, double t);

/// m(x, t) = m0(x + t): the density rides the leftward characteristics,
/// which is the unique sign for which linear_u satisfies u_t + u_x = g(m).
/// linear_residuals makes that choice machine-checkable.
double linear_m(const LinearCaseData& data, double x, double t);

/// Central-difference residuals of the coupled system at (x, t):
///   first:  u_t + u_x - g(m)
///   second: m_t - m_x
/// built from linear_u and linear_m with step h in (0, 1e-3] and t >= h.
/// Both are O(h^2) for smooth data; feeding the opposite transport sign into
/// the first equation leaves an O(1) defect, which is what this probe
/// detects.
std::array<double, 2> linear_residuals(const LinearCaseData& data, double x, double t, double h);

/// Maximum absolute centered second-difference residual of u_tt - u_xx over
/// a space-time lattice: `u_values[n][i]` holds u(center_i, n * dt), space is
/// periodic, time uses interior rows only. Rejects lattices smaller than 3x3.
double dalembert_check(const std::vector<std::vector<double>>& u_values,
                       const PeriodicGrid& grid, double dt);

}  // namespace ffmfg
