#pragma once

#include <array>
#include <vector>

#include "ffmfg/grid.hpp"

namespace ffmfg {

/// Per-snapshot summary: conserved quantities, equilibrium gaps, density
/// floor, and the extremes of the invariant pair. The w-extremes are NaN
/// whenever some cell has m <= 0, where the invariants are undefined.
struct DiagnosticsRecord {
  double time = 0.0;
  double mass = 0.0;    ///< length * cell_mean(m)
  double mean_v = 0.0;
  double l1_v = 0.0;    ///< integral of |v|
  double l1_m = 0.0;    ///< integral of |m - 1|
  double min_m = 0.0;
  double max_w1 = 0.0;
  double max_w2 = 0.0;
  double min_w1 = 0.0;
  double min_w2 = 0.0;
};

/// Snapshot sequence with matching per-snapshot diagnostics; times are
/// strictly increasing and include 0 and t_end.
struct Trajectory {
  std::vector<StateField> snapshots;
  std::vector<DiagnosticsRecord> diagnostics;
};

/// Computes the record for one state. Integrals are midpoint sums dx * sum,
/// exact for the piecewise-constant finite-volume representation.
DiagnosticsRecord record(const StateField& state);

/// Maximum absolute centered-difference residual of
/// u_tt - (1 + u_x^2) u_xx over interior lattice points, `u_values[n][i]`
/// sampled at (i * dx-ish abscissae, n * dt). Rejects lattices smaller than
/// 3x3 or with non-positive spacings.
double wave_residual_nonlinear(const std::vector<std::vector<double>>& u_values,
                               double dx, double dt);

/// (max_t |mass(t) - mass(0)| / |mass(0)|, max_t |mean_v(t) - mean_v(0)|)
/// over a trajectory's diagnostics. Falls back to absolute mass drift when
/// mass(0) == 0. Rejects empty trajectories.
std::array<double, 2> conservation_drift(const Trajectory& trajectory);

/// (max_t max_w1(t) - max_w1(0), max_t max_w2(t) - max_w2(0)): positive
/// values measure how far the discrete solution escapes the initial
/// sub-level region. NaN if any snapshot lost density positivity.
std::array<double, 2> invariant_extreme_drift(const Trajectory& trajectory);

}  // namespace ffmfg
