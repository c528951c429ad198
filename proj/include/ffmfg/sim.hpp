#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "ffmfg/grid.hpp"
#include "ffmfg/models.hpp"

namespace ffmfg {

/// Everything needed to run one simulation. epsilon == 0 selects the
/// hyperbolic solver, epsilon > 0 the viscous one.
struct SimConfig {
  ModelSpec model;
  PeriodicGrid grid;
  double t_end = 0.0;
  double cfl = 0.9;
  double epsilon = 0.0;
  double snapshot_interval = 0.0;  ///< 0 means "only record 0 and t_end"
  std::function<double(double)> v0;
  std::function<double(double)> m0;  ///< second component (density, or w for the elastic pairing)
  std::function<double(double)> u0;  ///< optional potential with v0 = u0'; set when configured from u0
  bool recenter_initial = false;
  std::uint64_t seed = 0;  ///< recorded for reproducibility of random initial data

  /// Human-readable descriptors of the initial data, echoed into run
  /// manifests; empty when the config was built programmatically.
  std::string v0_text;
  std::string m0_text;
  std::string u0_text;
  std::string g_text;
};

}  // namespace ffmfg
