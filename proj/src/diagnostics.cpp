#include "ffmfg/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ffmfg/riemann.hpp"

namespace ffmfg {

DiagnosticsRecord record(const StateField& state) {
  const std::size_t n = state.grid.n_cells;
  if (n == 0 || state.v.size() != n || state.m.size() != n)
    throw std::invalid_argument("record: malformed state");
  const double dx = state.grid.dx;

  DiagnosticsRecord rec;
  rec.time = state.time;
  double sum_v = 0.0, sum_m = 0.0, sum_abs_v = 0.0, sum_gap_m = 0.0;
  double min_m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    sum_v += state.v[i];
    sum_m += state.m[i];
    sum_abs_v += std::abs(state.v[i]);
    sum_gap_m += std::abs(state.m[i] - 1.0);
    min_m = std::min(min_m, state.m[i]);
  }
  rec.mass = dx * sum_m;
  rec.mean_v = sum_v / static_cast<double>(n);
  rec.l1_v = dx * sum_abs_v;
  rec.l1_m = dx * sum_gap_m;
  rec.min_m = min_m;

  if (min_m > 0.0) {
    double max_w1 = -std::numeric_limits<double>::infinity();
    double max_w2 = max_w1;
    double min_w1 = std::numeric_limits<double>::infinity();
    double min_w2 = min_w1;
    for (std::size_t i = 0; i < n; ++i) {
      const auto w = riemann_invariants(state.v[i], state.m[i]);
      max_w1 = std::max(max_w1, w[0]);
      max_w2 = std::max(max_w2, w[1]);
      min_w1 = std::min(min_w1, w[0]);
      min_w2 = std::min(min_w2, w[1]);
    }
    rec.max_w1 = max_w1;
    rec.max_w2 = max_w2;
    rec.min_w1 = min_w1;
    rec.min_w2 = min_w2;
  } else {
    const double undefined = std::numeric_limits<double>::quiet_NaN();
    rec.max_w1 = rec.max_w2 = rec.min_w1 = rec.min_w2 = undefined;
  }
  return rec;
}

double wave_residual_nonlinear(const std::vector<std::vector<double>>& u_values,
                               double dx, double dt) {
  const std::size_t rows = u_values.size();
  if (rows < 3) throw std::invalid_argument("wave_residual_nonlinear: need at least 3 time rows");
  const std::size_t cols = u_values.front().size();
  if (cols < 3) throw std::invalid_argument("wave_residual_nonlinear: need at least 3 space columns");
  if (!(dx > 0.0) || !(dt > 0.0))
    throw std::invalid_argument("wave_residual_nonlinear: spacings must be positive");
  for (const auto& row : u_values)
    if (row.size() != cols) throw std::invalid_argument("wave_residual_nonlinear: ragged lattice");

  const double inv_dt2 = 1.0 / (dt * dt);
  const double inv_dx2 = 1.0 / (dx * dx);
  const double inv_2dx = 1.0 / (2.0 * dx);
  double worst = 0.0;
  for (std::size_t n = 1; n + 1 < rows; ++n) {
    for (std::size_t i = 1; i + 1 < cols; ++i) {
      const double u_tt = (u_values[n + 1][i] - 2.0 * u_values[n][i] + u_values[n - 1][i]) * inv_dt2;
      const double u_x = (u_values[n][i + 1] - u_values[n][i - 1]) * inv_2dx;
      const double u_xx = (u_values[n][i + 1] - 2.0 * u_values[n][i] + u_values[n][i - 1]) * inv_dx2;
      worst = std::max(worst, std::abs(u_tt - (1.0 + u_x * u_x) * u_xx));
    }
  }
  return worst;
}

std::array<double, 2> conservation_drift(const Trajectory& trajectory) {
  if (trajectory.diagnostics.empty())
    throw std::invalid_argument("conservation_drift: empty trajectory");
  const double mass0 = trajectory.diagnostics.front().mass;
  const double mean_v0 = trajectory.diagnostics.front().mean_v;
  double mass_drift = 0.0, mean_v_drift = 0.0;
  for (const auto& rec : trajectory.diagnostics) {
    mass_drift = std::max(mass_drift, std::abs(rec.mass - mass0));
    mean_v_drift = std::max(mean_v_drift, std::abs(rec.mean_v - mean_v0));
  }
  if (mass0 != 0.0) mass_drift /= std::abs(mass0);
  return {mass_drift, mean_v_drift};
}

std::array<double, 2> invariant_extreme_drift(const Trajectory& trajectory) {
  if (trajectory.diagnostics.empty())
    throw std::invalid_argument("invariant_extreme_drift: empty trajectory");
  const double w1_0 = trajectory.diagnostics.front().max_w1;
  const double w2_0 = trajectory.diagnostics.front().max_w2;
  double w1_peak = w1_0, w2_peak = w2_0;
  for (const auto& rec : trajectory.diagnostics) {
    if (std::isnan(rec.max_w1) || std::isnan(rec.max_w2)) {
      const double undefined = std::numeric_limits<double>::quiet_NaN();
      return {undefined, undefined};
    }
    w1_peak = std::max(w1_peak, rec.max_w1);
    w2_peak = std::max(w2_peak, rec.max_w2);
  }
  return {w1_peak - w1_0, w2_peak - w2_0};
}

}  // namespace ffmfg
