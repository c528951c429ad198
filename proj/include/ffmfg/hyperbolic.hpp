#pragma once

#include <array>

#include "ffmfg/diagnostics.hpp"
#include "ffmfg/grid.hpp"
#include "ffmfg/models.hpp"
#include "ffmfg/sim.hpp"

namespace ffmfg {

enum class FluxKind {
  Rusanov,        ///< jump penalty from the two adjacent states
  LaxFriedrichs,  ///< jump penalty from the global maximum speed, refreshed per step
};

/// First-order conservative scheme parameters; construction rejects
/// cfl outside (0, 1].
struct HyperbolicScheme {
  explicit HyperbolicScheme(double cfl = 0.9, FluxKind flux_kind = FluxKind::Rusanov);

  double cfl;
  FluxKind flux_kind;
};

/// Rusanov interface flux
///   (F(left) + F(right)) / 2 - (alpha / 2) (right - left),
/// alpha = max spectral radius of the two states. Consistency
/// numerical_flux(U, U) == flux(U) holds exactly.
std::array<double, 2> numerical_flux(const ModelSpec& model,
                                     std::array<double, 2> left,
                                     std::array<double, 2> right);

/// Largest stable step cfl * dx / max_i |lambda|_i; throws when any cell has
/// a non-finite wave speed or the maximum speed is not positive.
double stable_dt(const ModelSpec& model, const StateField& state, double cfl);

/// One conservative update U_i -= (dt/dx) (Fhat_{i+1/2} - Fhat_{i-1/2}) with
/// periodic indexing. Cell means of both components telescope exactly. The
/// caller keeps dt within stable_dt; this is not re-checked. For the
/// density-carrying models a non-positive updated density raises
/// positivity_error with the time and cell.
StateField step(const ModelSpec& model, const HyperbolicScheme& scheme,
                const StateField& state, double dt);

/// Marches config.t_end with dt = min(stable_dt, distance to the next
/// snapshot time), landing on snapshot times exactly; records a snapshot and
/// diagnostics at t = 0, every snapshot_interval, and t_end. Requires
/// config.epsilon == 0.
Trajectory evolve(const SimConfig& config);

}  // namespace ffmfg
