#pragma once

#include <functional>
#include <vector>

#include "ffmfg/diagnostics.hpp"
#include "ffmfg/grid.hpp"
#include "ffmfg/sim.hpp"

namespace ffmfg::detail {

using StableBound = std::function<double(const StateField&)>;
using StepFn = std::function<StateField(const StateField&, double)>;

/// Snapshot times after 0: every positive multiple of snapshot_interval
/// below t_end, then t_end itself.
std::vector<double> snapshot_times(const SimConfig& config);

/// Samples the configured initial data (density-positive sampling for the
/// density-carrying models) and applies the optional re-centering.
StateField initial_state(const SimConfig& config);

/// Shared time-marching driver: samples the initial state (density-positive
/// sampling for the density-carrying models), optionally re-centers it, then
/// advances with dt = min(stable_bound, distance to next snapshot), landing
/// on each snapshot time exactly and recording state + diagnostics there.
Trajectory march(const SimConfig& config, const StableBound& stable_bound,
                 const StepFn& do_step);

}  // namespace ffmfg::detail
