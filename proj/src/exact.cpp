#include "ffmfg/exact.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ffmfg/quadrature.hpp"

namespace ffmfg {

namespace {

void require_valid(const LinearCaseData& data, const char* where) {
  if (!data.u0 || !data.m0 || !(data.length > 0.0))
    throw std::invalid_argument(std::string(where) + ": incomplete case data");
}

}  // namespace

double linear_u(const LinearCaseData& data, double x, double t) {
  require_valid(data, "linear_u");
  if (!(t >= 0.0)) throw std::invalid_argument("linear_u: requires t >= 0");

  const double advected = data.u0(wrap_coordinate(x - t, data.length));
  const auto integrand = [&](double s) {
    return coupling_value(data.g, data.m0(wrap_coordinate(s, data.length)));
  };
  const double coupling_term = 0.5 * integrate(integrand, x - t, x + t, 1e-12);
  return advected + coupling_term;
}

double linear_m(const LinearCaseData& data, double x, double t) {
  require_valid(data, "linear_m");
  if (!(t >= 0.0)) throw std::invalid_argument("linear_m: requires t >= 0");
  return data.m0(wrap_coordinate(x + t, data.length));
}

std::array<double, 2> linear_residuals(const LinearCaseData& data, double x, double t, double h) {
  require_valid(data, "linear_residuals");
  if (!(h > 0.0) || h > 1e-3)
    throw std::invalid_argument("linear_residuals: requires h in (0, 1e-3]");
  if (!(t >= h)) throw std::invalid_argument("linear_residuals: requires t >= h");

  const double u_t = (linear_u(data, x, t + h) - linear_u(data, x, t - h)) / (2.0 * h);
  const double u_x = (linear_u(data, x + h, t) - linear_u(data, x - h, t)) / (2.0 * h);
  const double m_t = (linear_m(data, x, t + h) - linear_m(data, x, t - h)) / (2.0 * h);
  const double m_x = (linear_m(data, x + h, t) - linear_m(data, x - h, t)) / (2.0 * h);

  const double first = u_t + u_x - coupling_value(data.g, linear_m(data, x, t));
  const double second = m_t - m_x;
  return {first, second};
}

double dalembert_check(const std::vector<std::vector<double>>& u_values,
                       const PeriodicGrid& grid, double dt) {
  const std::size_t rows = u_values.size();
  const std::size_t cols = grid.n_cells;
  if (rows < 3 || cols < 3)
    throw std::invalid_argument("dalembert_check: lattice must be at least 3x3");
  if (!(dt > 0.0)) throw std::invalid_argument("dalembert_check: requires dt > 0");
  for (const auto& row : u_values)
    if (row.size() != cols)
      throw std::invalid_argument("dalembert_check: ragged lattice");

  const double inv_dt2 = 1.0 / (dt * dt);
  const double inv_dx2 = 1.0 / (grid.dx * grid.dx);
  double worst = 0.0;
  for (std::size_t n = 1; n + 1 < rows; ++n) {
    for (std::size_t i = 0; i < cols; ++i) {
      const std::size_t left = (i + cols - 1) % cols;
      const std::size_t right = (i + 1) % cols;
      const double u_tt = (u_values[n + 1][i] - 2.0 * u_values[n][i] + u_values[n - 1][i]) * inv_dt2;
      const double u_xx = (u_values[n][right] - 2.0 * u_values[n][i] + u_values[n][left]) * inv_dx2;
      worst = std::max(worst, std::abs(u_tt - u_xx));
    }
  }
  return worst;
}

}  // namespace ffmfg
