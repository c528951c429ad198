#include "ffmfg/parabolic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ffmfg/errors.hpp"
#include "ffmfg/hyperbolic.hpp"
#include "march.hpp"

namespace ffmfg {

ViscousScheme::ViscousScheme(double cfl, double diffusion_safety)
    : cfl(cfl), diffusion_safety(diffusion_safety) {
  if (!(cfl > 0.0) || cfl > 1.0)
    throw std::invalid_argument("ViscousScheme: cfl must lie in (0, 1], got " +
                                std::to_string(cfl));
  if (!(diffusion_safety > 0.0) || diffusion_safety > 0.5)
    throw std::invalid_argument("ViscousScheme: diffusion_safety must lie in (0, 0.5], got " +
                                std::to_string(diffusion_safety));
}

double stable_dt_viscous(const ModelSpec& model, const StateField& state,
                         const ViscousScheme& scheme, double epsilon) {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("stable_dt_viscous: requires epsilon > 0");
  const double advective = stable_dt(model, state, scheme.cfl);
  const double diffusive = scheme.diffusion_safety * state.grid.dx * state.grid.dx / epsilon;
  return std::min(advective, diffusive);
}

StateField step_viscous(const ModelSpec& model, const ViscousScheme& scheme,
                        const StateField& state, double epsilon, double dt) {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("step_viscous: requires epsilon > 0");

  const HyperbolicScheme transport(scheme.cfl);
  StateField next = step(model, transport, state, dt);

  const std::size_t n = state.grid.n_cells;
  const double nu = epsilon * dt / (state.grid.dx * state.grid.dx);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    const std::size_t succ = (i + 1) % n;
    next.v[i] += nu * (state.v[succ] - 2.0 * state.v[i] + state.v[prev]);
    next.m[i] += nu * (state.m[succ] - 2.0 * state.m[i] + state.m[prev]);
  }

  if (model.kind != ModelKind::PSystem) {
    for (std::size_t i = 0; i < n; ++i)
      if (!(next.m[i] > 0.0))
        throw positivity_error(next.time, i, state.grid.centers[i], next.m[i]);
  }
  return next;
}

std::vector<double> diffuse(const std::vector<double>& values, double epsilon,
                            double dt, double dx) {
  const std::size_t n = values.size();
  if (n < 2) throw std::invalid_argument("diffuse: need at least 2 cells");
  if (!(dx > 0.0) || !(dt > 0.0) || !(epsilon > 0.0))
    throw std::invalid_argument("diffuse: epsilon, dt, dx must be positive");

  const double nu = epsilon * dt / (dx * dx);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    const std::size_t succ = (i + 1) % n;
    out[i] = values[i] + nu * (values[succ] - 2.0 * values[i] + values[prev]);
  }
  return out;
}

StateField recenter(const StateField& state) {
  const std::size_t n = state.grid.n_cells;
  if (n == 0 || state.v.size() != n || state.m.size() != n)
    throw std::invalid_argument("recenter: malformed state");

  const double mean_v = cell_mean(state.grid, state.v);
  const double mean_m = cell_mean(state.grid, state.m);
  if (!(mean_m > 0.0))
    throw std::invalid_argument("recenter: requires mean(m) > 0, got " + std::to_string(mean_m));

  StateField out = state;
  for (std::size_t i = 0; i < n; ++i) {
    out.v[i] = state.v[i] - mean_v;
    out.m[i] = state.m[i] / mean_m;
  }
  return out;
}

Trajectory evolve_viscous(const SimConfig& config) {
  if (!(config.epsilon > 0.0))
    throw std::invalid_argument("evolve_viscous: requires epsilon > 0 (use evolve)");
  const ViscousScheme scheme(config.cfl);

  if (config.model.kind != ModelKind::PSystem) {
    const StateField initial = detail::initial_state(config);
    const double mean_v = cell_mean(initial.grid, initial.v);
    const double mean_m = cell_mean(initial.grid, initial.m);
    if (std::abs(mean_v) > 1e-12 || std::abs(mean_m - 1.0) > 1e-12)
      throw std::invalid_argument(
          "evolve_viscous: initial means must be (0, 1) within 1e-12; got mean_v=" +
          std::to_string(mean_v) + ", mean_m=" + std::to_string(mean_m) +
          " (enable recenter or call recenter first)");
  }

  return detail::march(
      config,
      [&](const StateField& state) {
        return stable_dt_viscous(config.model, state, scheme, config.epsilon);
      },
      [&](const StateField& state, double dt) {
        return step_viscous(config.model, scheme, state, config.epsilon, dt);
      });
}

}  // namespace ffmfg
