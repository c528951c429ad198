#include "ffmfg/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ffmfg {

namespace {

// Kronrod-15 abscissae on [0, 1] (symmetric about 0) and weights; the odd
// abscissae form the embedded Gauss-7 rule with weights wg.
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  double kronrod;
  double error;
};

PanelResult panel(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double gauss = 0.0;
  double kronrod = 0.0;
  for (int j = 0; j < 8; ++j) {
    const double offset = half * xgk[j];
    const double f_sum = j == 7 ? f(center) : f(center - offset) + f(center + offset);
    kronrod += wgk[j] * f_sum;
    if (j % 2 == 1) gauss += wg[j / 2] * f_sum;
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

double integrate_recursive(const std::function<double(double)>& f, double a, double b,
                           double tol, int depth) {
  const PanelResult result = panel(f, a, b);
  if (result.error <= tol || b - a <= 1e-14 * (std::abs(a) + std::abs(b)))
    return result.kronrod;
  if (depth >= 60)
    throw std::runtime_error("integrate: tolerance not reached (non-smooth integrand?)");
  const double mid = 0.5 * (a + b);
  return integrate_recursive(f, a, mid, 0.5 * tol, depth + 1) +
         integrate_recursive(f, mid, b, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate: tolerance must be positive");
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, abs_tol);
  return integrate_recursive(f, a, b, abs_tol, 0);
}

}  // namespace ffmfg
