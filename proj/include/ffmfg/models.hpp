#pragma once

#include <array>

namespace ffmfg {

/// The three flux families the solvers understand.
enum class ModelKind {
  QuadraticQuadratic,  ///< F(v, m) = (v^2/2 - m^2/2, -v m), density-carrying
  PSystem,             ///< F(v, w) = (-w, -(v + v^3/3)), elastic wave pairing
  LinearExact,         ///< F(v, m) = (v - g(m), -m), closed-form reference
};

/// Density coupling g used by the LinearExact flux.
enum class Coupling {
  Identity,    ///< g(m) = m
  Logarithm,   ///< g(m) = ln m
  HalfSquare,  ///< g(m) = m^2 / 2
};

struct ModelSpec {
  ModelKind kind = ModelKind::QuadraticQuadratic;
  Coupling g = Coupling::Identity;
};

/// Eigen-decomposition of a 2x2 flux Jacobian. Eigenvectors are not
/// normalised; their scaling is chosen for floating-point stability.
struct EigenPair {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  std::array<double, 2> r1{};
  std::array<double, 2> r2{};
};

/// F(v, m) = (v^2/2 - m^2/2, -v m). Requires m > 0.
std::array<double, 2> flux_qq(double v, double m);

/// DF(v, m) = [[v, -m], [-m, -v]]; symmetric, so the eigenvector pair below
/// is orthogonal at every state. Requires m > 0.
std::array<std::array<double, 2>, 2> jacobian_qq(double v, double m);

/// Eigenvalues -s, +s with s = sqrt(v^2 + m^2) and matching eigenvectors.
/// Components of the form s -/+ v are evaluated as m^2 / (s +/- v) where the
/// direct difference would cancel, keeping DF r = lambda r accurate to
/// machine precision even at m << |v|. Requires m > 0.
EigenPair eigen_qq(double v, double m);

/// Directional derivatives of the two wave speeds along the eigenvectors,
/// scaled so the density component of each direction is +1:
///   ind1 = (-m^2 + v (v - s)) / (m s),  ind2 = (m^2 - v (v + s)) / (m s).
/// ind1 vanishes on the ray m = sqrt(3) (-v), v < 0 and ind2 on
/// m = sqrt(3) v, v > 0; both fields degenerate there. Requires m > 0.
std::array<double, 2> gnl_indicators(double v, double m);

/// Signed residual m^2 - 3 v^2 of the degeneracy set {m = sqrt(3) |v|};
/// zero exactly on it.
double singular_residual(double v, double m);

/// F(v, w) = (-w, -sigma(v)) with sigma(z) = z + z^3/3.
std::array<double, 2> flux_psystem(double v, double w);

/// sigma(z) = z + z^3/3.
double psystem_stress(double z);

/// g(m) for the LinearExact coupling choices; Logarithm requires m > 0.
double coupling_value(Coupling g, double m);

/// dg/dm.
double coupling_derivative(Coupling g, double m);

/// F(v, m) = (v - g(m), -m).
std::array<double, 2> flux_linear(const ModelSpec& model, double v, double m);

/// Flux of `model` at one state (second slot is m, w, or m by kind).
std::array<double, 2> model_flux(const ModelSpec& model, double a, double b);

/// Largest absolute characteristic speed of `model` at one state:
/// sqrt(v^2 + m^2), sqrt(1 + v^2), and 1 respectively.
double spectral_radius(const ModelSpec& model, double a, double b);

}  // namespace ffmfg
