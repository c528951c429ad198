#include "ffmfg/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ffmfg {

namespace {

void require_positive_density(double m, const char* where) {
  if (!(m > 0.0))
    throw std::invalid_argument(std::string(where) + ": requires m > 0, got m=" + std::to_string(m));
}

double invariant_value(int which, double v, double m) {
  const auto w = riemann_invariants(v, m);
  return which == 1 ? w[0] : w[1];
}

}  // namespace

std::array<double, 2> riemann_invariants(double v, double m) {
  require_positive_density(m, "riemann_invariants");
  const double s = std::hypot(v, m);
  const double s3 = s * s * s;
  const double q = v * (v * v - 3.0 * m * m);
  return {s3 - q, s3 + q};
}

std::array<std::array<double, 2>, 2> riemann_gradients(double v, double m) {
  require_positive_density(m, "riemann_gradients");
  const double s = std::hypot(v, m);
  return {{{3.0 * s * v - 3.0 * v * v + 3.0 * m * m, 3.0 * s * m + 6.0 * v * m},
           {3.0 * s * v + 3.0 * v * v - 3.0 * m * m, 3.0 * s * m - 6.0 * v * m}}};
}

std::array<double, 2> pde_residuals(double v, double m) {
  const auto grad = riemann_gradients(v, m);
  const double s = std::hypot(v, m);
  const double rho1 = (v + s) * grad[0][0] - m * grad[0][1];
  const double rho2 = (s - v) * grad[1][0] + m * grad[1][1];
  return {rho1, rho2};
}

bool domain_contains(const InvariantDomain& domain, double v, double m) {
  const auto w = riemann_invariants(v, m);
  return w[0] <= domain.c1 && w[1] <= domain.c2;
}

LevelCurve level_curve(int which, double c, std::span<const double> m_values) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("level_curve: which must be 1 or 2");
  if (!(c > 0.0))
    throw std::invalid_argument("level_curve: level must be positive");

  constexpr std::size_t kScanPoints = 2048;
  const double tol = 1e-10 * c;

  LevelCurve curve;
  for (double m : m_values) {
    require_positive_density(m, "level_curve");
    if (m * m * m > c) {
      curve.skipped_m.push_back(m);
      continue;
    }

    const double v_max = std::cbrt(c) + m;
    const double dv = 2.0 * v_max / static_cast<double>(kScanPoints - 1);
    double prev_v = -v_max;
    double prev_f = invariant_value(which, prev_v, m) - c;
    for (std::size_t k = 1; k < kScanPoints; ++k) {
      const double cur_v = -v_max + static_cast<double>(k) * dv;
      const double cur_f = invariant_value(which, cur_v, m) - c;
      if (prev_f == 0.0) {
        curve.points.push_back({prev_v, m});
      } else if (cur_f != 0.0 && (prev_f < 0.0) != (cur_f < 0.0)) {
        double lo = prev_v, hi = cur_v;
        bool lo_negative = prev_f < 0.0;
        double mid = 0.5 * (lo + hi);
        for (int it = 0; it < 200; ++it) {
          mid = 0.5 * (lo + hi);
          const double f_mid = invariant_value(which, mid, m) - c;
          if (std::abs(f_mid) <= tol || mid == lo || mid == hi) break;
          if ((f_mid < 0.0) != lo_negative) {
            hi = mid;
          } else {
            lo = mid;
          }
        }
        curve.points.push_back({mid, m});
      }
      prev_v = cur_v;
      prev_f = cur_f;
    }
    if (prev_f == 0.0) curve.points.push_back({prev_v, m});
  }
  return curve;
}

}  // namespace ffmfg
