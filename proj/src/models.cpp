#include "ffmfg/models.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ffmfg {

namespace {

void require_positive_density(double m, const char* where) {
  if (!(m > 0.0))
    throw std::invalid_argument(std::string(where) + ": requires m > 0, got m=" + std::to_string(m));
}

}  // namespace

std::array<double, 2> flux_qq(double v, double m) {
  require_positive_density(m, "flux_qq");
  return {0.5 * v * v - 0.5 * m * m, -v * m};
}

std::array<std::array<double, 2>, 2> jacobian_qq(double v, double m) {
  require_positive_density(m, "jacobian_qq");
  return {{{v, -m}, {-m, -v}}};
}

EigenPair eigen_qq(double v, double m) {
  require_positive_density(m, "eigen_qq");
  const double s = std::hypot(v, m);

  EigenPair pair;
  pair.lambda1 = -s;
  pair.lambda2 = s;
  // r1 = (s - v, m), r2 = (s + v, -m); the cancelling component is rewritten
  // through (s - v)(s + v) = m^2.
  const double r1_first = v > 0.0 ? m * m / (s + v) : s - v;
  const double r2_first = v < 0.0 ? m * m / (s - v) : s + v;
  pair.r1 = {r1_first, m};
  pair.r2 = {r2_first, -m};
  return pair;
}

std::array<double, 2> gnl_indicators(double v, double m) {
  require_positive_density(m, "gnl_indicators");
  const double s = std::hypot(v, m);
  // v (v - s) and v (v + s) each cancel on one half-plane; route the bad sign
  // through v (v -/+ s) = -v m^2 / (v +/- s).
  const double v_minus = v > 0.0 ? -v * m * m / (v + s) : v * (v - s);
  const double v_plus = v < 0.0 ? v * m * m / (s - v) : v * (v + s);
  const double ind1 = (-m * m + v_minus) / (m * s);
  const double ind2 = (m * m - v_plus) / (m * s);
  return {ind1, ind2};
}

double singular_residual(double v, double m) {
  return m * m - 3.0 * v * v;
}

std::array<double, 2> flux_psystem(double v, double w) {
  return {-w, -psystem_stress(v)};
}

double psystem_stress(double z) {
  return z + z * z * z / 3.0;
}

double coupling_value(Coupling g, double m) {
  switch (g) {
    case Coupling::Identity: return m;
    case Coupling::Logarithm:
      require_positive_density(m, "coupling_value");
      return std::log(m);
    case Coupling::HalfSquare: return 0.5 * m * m;
  }
  throw std::invalid_argument("coupling_value: unknown coupling");
}

double coupling_derivative(Coupling g, double m) {
  switch (g) {
    case Coupling::Identity: return 1.0;
    case Coupling::Logarithm:
      require_positive_density(m, "coupling_derivative");
      return 1.0 / m;
    case Coupling::HalfSquare: return m;
  }
  throw std::invalid_argument("coupling_derivative: unknown coupling");
}

std::array<double, 2> flux_linear(const ModelSpec& model, double v, double m) {
  return {v - coupling_value(model.g, m), -m};
}

std::array<double, 2> model_flux(const ModelSpec& model, double a, double b) {
  switch (model.kind) {
    case ModelKind::QuadraticQuadratic: return flux_qq(a, b);
    case ModelKind::PSystem: return flux_psystem(a, b);
    case ModelKind::LinearExact: return flux_linear(model, a, b);
  }
  throw std::invalid_argument("model_flux: unknown model");
}

double spectral_radius(const ModelSpec& model, double a, double b) {
  switch (model.kind) {
    case ModelKind::QuadraticQuadratic: return std::hypot(a, b);
    case ModelKind::PSystem: return std::sqrt(1.0 + a * a);
    case ModelKind::LinearExact: return 1.0;
  }
  throw std::invalid_argument("spectral_radius: unknown model");
}

}  // namespace ffmfg
