#pragma once

#include <vector>

#include "ffmfg/diagnostics.hpp"
#include "ffmfg/grid.hpp"
#include "ffmfg/models.hpp"
#include "ffmfg/sim.hpp"

namespace ffmfg {

/// Explicit viscous-solver parameters; construction rejects cfl outside
/// (0, 1] and diffusion_safety outside (0, 0.5].
struct ViscousScheme {
  explicit ViscousScheme(double cfl = 0.9, double diffusion_safety = 0.25);

  double cfl;
  double diffusion_safety;
};

/// min(cfl * dx / max|lambda|, diffusion_safety * dx^2 / epsilon): the
/// advective and diffusive stability constraints combined.
double stable_dt_viscous(const ModelSpec& model, const StateField& state,
                         const ViscousScheme& scheme, double epsilon);

/// One explicit update: the conservative Rusanov step plus the centered
/// second difference epsilon * dt/dx^2 * (U_{i+1} - 2 U_i + U_{i-1}) on both
/// components, both stencils read from the same input state. Means of v and
/// m telescope exactly. The caller keeps dt within stable_dt_viscous. The
/// density-carrying models raise positivity_error if a density turns
/// non-positive.
StateField step_viscous(const ModelSpec& model, const ViscousScheme& scheme,
                        const StateField& state, double epsilon, double dt);

/// Periodic centered diffusion update values + (epsilon * dt / dx^2) *
/// (shift(-1) - 2 * id + shift(+1)); the pure-diffusion half of step_viscous,
/// exposed for heat-kernel decay checks.
std::vector<double> diffuse(const std::vector<double>& values, double epsilon,
                            double dt, double dx);

/// v <- v - mean(v); m <- m / mean(m). Makes the means exactly (0, 1) up to
/// rounding; idempotent. Rejects mean(m) <= 0.
StateField recenter(const StateField& state);

/// Viscous analogue of evolve. Requires epsilon > 0; for the
/// density-carrying models the sampled initial data must satisfy
/// |mean(v)| <= 1e-12 and |mean(m) - 1| <= 1e-12 (set recenter in the config
/// or call recenter yourself), since the long-time equilibrium statement is
/// calibrated to those means.
Trajectory evolve_viscous(const SimConfig& config);

}  // namespace ffmfg
