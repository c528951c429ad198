#include "march.hpp"

#include <cmath>
#include <stdexcept>

#include "ffmfg/models.hpp"
#include "ffmfg/parabolic.hpp"

namespace ffmfg::detail {

std::vector<double> snapshot_times(const SimConfig& config) {
  if (!(config.t_end > 0.0) || !std::isfinite(config.t_end))
    throw std::invalid_argument("march: t_end must be positive and finite");
  if (config.snapshot_interval < 0.0)
    throw std::invalid_argument("march: snapshot_interval must be nonnegative");

  std::vector<double> times;
  if (config.snapshot_interval > 0.0) {
    const double near_end = config.t_end * (1.0 - 1e-12);
    for (std::size_t k = 1;; ++k) {
      const double t = static_cast<double>(k) * config.snapshot_interval;
      if (t >= near_end) break;
      times.push_back(t);
    }
  }
  times.push_back(config.t_end);
  return times;
}

StateField initial_state(const SimConfig& config) {
  if (!config.v0 || !config.m0)
    throw std::invalid_argument("march: initial data functions are required");

  StateField state = config.model.kind == ModelKind::PSystem
                         ? sample_pair(config.grid, config.v0, config.m0)
                         : sample_field(config.grid, config.v0, config.m0);
  if (config.recenter_initial) state = recenter(state);
  return state;
}

Trajectory march(const SimConfig& config, const StableBound& stable_bound,
                 const StepFn& do_step) {
  StateField state = initial_state(config);
  const std::vector<double> targets = snapshot_times(config);

  Trajectory trajectory;
  trajectory.snapshots.push_back(state);
  trajectory.diagnostics.push_back(record(state));

  for (double target : targets) {
    while (state.time < target) {
      const double remaining = target - state.time;
      const double bound = stable_bound(state);
      if (bound >= remaining) {
        state = do_step(state, remaining);
        state.time = target;
      } else {
        state = do_step(state, bound);
      }
    }
    trajectory.snapshots.push_back(state);
    trajectory.diagnostics.push_back(record(state));
  }
  return trajectory;
}

}  // namespace ffmfg::detail
