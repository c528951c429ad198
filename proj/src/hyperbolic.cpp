#include "ffmfg/hyperbolic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffmfg/errors.hpp"
#include "march.hpp"

namespace ffmfg {

namespace {

std::array<double, 2> interface_flux(const ModelSpec& model,
                                     const std::array<double, 2>& left,
                                     const std::array<double, 2>& right, double alpha) {
  const auto f_left = model_flux(model, left[0], left[1]);
  const auto f_right = model_flux(model, right[0], right[1]);
  return {0.5 * (f_left[0] + f_right[0]) - 0.5 * alpha * (right[0] - left[0]),
          0.5 * (f_left[1] + f_right[1]) - 0.5 * alpha * (right[1] - left[1])};
}

bool carries_density(const ModelSpec& model) {
  return model.kind != ModelKind::PSystem;
}

}  // namespace

HyperbolicScheme::HyperbolicScheme(double cfl, FluxKind flux_kind)
    : cfl(cfl), flux_kind(flux_kind) {
  if (!(cfl > 0.0) || cfl > 1.0)
    throw std::invalid_argument("HyperbolicScheme: cfl must lie in (0, 1], got " +
                                std::to_string(cfl));
}

std::array<double, 2> numerical_flux(const ModelSpec& model,
                                     std::array<double, 2> left,
                                     std::array<double, 2> right) {
  const double alpha = std::max(spectral_radius(model, left[0], left[1]),
                                spectral_radius(model, right[0], right[1]));
  return interface_flux(model, left, right, alpha);
}

double stable_dt(const ModelSpec& model, const StateField& state, double cfl) {
  if (!(cfl > 0.0)) throw std::invalid_argument("stable_dt: cfl must be positive");
  double alpha = 0.0;
  for (std::size_t i = 0; i < state.grid.n_cells; ++i) {
    const double speed = spectral_radius(model, state.v[i], state.m[i]);
    if (!std::isfinite(speed))
      throw std::runtime_error("stable_dt: non-finite wave speed");
    alpha = std::max(alpha, speed);
  }
  if (!(alpha > 0.0))
    throw std::runtime_error("stable_dt: maximum wave speed is not positive");
  return cfl * state.grid.dx / alpha;
}

StateField step(const ModelSpec& model, const HyperbolicScheme& scheme,
                const StateField& state, double dt) {
  const std::size_t n = state.grid.n_cells;
  if (n < 2 || state.v.size() != n || state.m.size() != n)
    throw std::invalid_argument("step: malformed state");
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw std::invalid_argument("step: dt must be positive and finite");

  std::vector<double> speeds(n);
  for (std::size_t i = 0; i < n; ++i)
    speeds[i] = spectral_radius(model, state.v[i], state.m[i]);
  double alpha_global = 0.0;
  if (scheme.flux_kind == FluxKind::LaxFriedrichs)
    for (double speed : speeds) alpha_global = std::max(alpha_global, speed);

  // fhat[i] is the flux through the interface between cells i and i+1.
  std::vector<std::array<double, 2>> fhat(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const double alpha = scheme.flux_kind == FluxKind::Rusanov
                             ? std::max(speeds[i], speeds[j])
                             : alpha_global;
    fhat[i] = interface_flux(model, {state.v[i], state.m[i]}, {state.v[j], state.m[j]}, alpha);
  }

  StateField next = state;
  next.time = state.time + dt;
  const double mu = dt / state.grid.dx;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    next.v[i] = state.v[i] - mu * (fhat[i][0] - fhat[prev][0]);
    next.m[i] = state.m[i] - mu * (fhat[i][1] - fhat[prev][1]);
  }

  if (carries_density(model)) {
    for (std::size_t i = 0; i < n; ++i)
      if (!(next.m[i] > 0.0))
        throw positivity_error(next.time, i, state.grid.centers[i], next.m[i]);
  }
  return next;
}

Trajectory evolve(const SimConfig& config) {
  if (config.epsilon != 0.0)
    throw std::invalid_argument("evolve: requires epsilon == 0 (use evolve_viscous)");
  const HyperbolicScheme scheme(config.cfl);
  return detail::march(
      config,
      [&](const StateField& state) { return stable_dt(config.model, state, scheme.cfl); },
      [&](const StateField& state, double dt) { return step(config.model, scheme, state, dt); });
}

}  // namespace ffmfg
