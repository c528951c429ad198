#pragma once

#include <array>
#include <span>
#include <vector>

namespace ffmfg {

/// Closed sub-level region {w1 <= c1, w2 <= c2} of the invariant pair.
struct InvariantDomain {
  double c1 = 0.0;
  double c2 = 0.0;
};

/// Sampled locus {w_which = c} in the upper half-plane m > 0.
struct LevelCurve {
  /// (v, m) points found by root bracketing, ordered by increasing m then v.
  std::vector<std::array<double, 2>> points;
  /// Density values whose scan window admits no representable root.
  std::vector<double> skipped_m;
};

/// Invariant pair of the quadratic-quadratic flux with s = sqrt(v^2 + m^2):
///   w1 = s^3 - v^3 + 3 v m^2,  w2 = s^3 + v^3 - 3 v m^2.
/// Both are computed from the shared kernel q = v (v^2 - 3 m^2) as s^3 -/+ q,
/// which makes the mirror symmetry w1(v, m) == w2(-v, m) hold bit-exactly.
/// Requires m > 0; both values are then nonnegative.
std::array<double, 2> riemann_invariants(double v, double m);

/// Gradients { (dw1/dv, dw1/dm), (dw2/dv, dw2/dm) }:
///   grad w1 = (3 s v - 3 v^2 + 3 m^2, 3 s m + 6 v m),
///   grad w2 = (3 s v + 3 v^2 - 3 m^2, 3 s m - 6 v m).
std::array<std::array<double, 2>, 2> riemann_gradients(double v, double m);

/// Transport residuals that vanish identically because w1, w2 are constant
/// along their characteristic families:
///   rho1 = (v + s) dw1/dv - m dw1/dm,  rho2 = (s - v) dw2/dv + m dw2/dm.
std::array<double, 2> pde_residuals(double v, double m);

/// Whether (v, m) lies in the closed sub-level region (boundary included).
/// Requires m > 0.
bool domain_contains(const InvariantDomain& domain, double v, double m);

/// Traces {w_which = c} for which in {1, 2} and c > 0 over the given m > 0
/// values. For each m, v is scanned over [-(cbrt(c) + m), cbrt(c) + m] on a
/// 2048-point lattice; each sign change of w - c is refined by bisection
/// until |w - c| <= 1e-10 * c. Density values with m^3 > c are recorded in
/// skipped_m and not scanned. Points follow the order of m_values; roots at
/// equal m are ordered by increasing v.
LevelCurve level_curve(int which, double c, std::span<const double> m_values);

}  // namespace ffmfg
