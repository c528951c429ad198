#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "ffmfg/diagnostics.hpp"
#include "ffmfg/sim.hpp"

namespace ffmfg {

enum class Command { Simulate, LevelSets, Eigen, ConvergenceStudy };

struct RunManifest {
  Command command = Command::Simulate;
  std::filesystem::path config_path;
  std::filesystem::path out_dir;  ///< unused by `eigen`, which prints to stdout
  bool force = false;             ///< allow overwriting existing output files
};

/// Parses `key = value` lines (with `#` comments) into a SimConfig.
/// Documented keys: model (qq | psystem | linear), n_cells, length, t_end,
/// cfl, epsilon, snapshot_interval, v0, m0, u0, g (identity | logarithm |
/// halfsquare), seed, recenter (true | false). Exactly one of v0 and u0 must
/// be given; u0 implies v0 = u0'. Initial-data values are expressions over
/// x (see Expr); `randomtrig` draws are seeded by `seed` and consumed in the
/// fixed order u0-or-v0 then m0. Unknown keys, duplicates, malformed values,
/// and density data that is non-positive at the grid centers raise
/// config_error with the offending line number.
SimConfig parse_config(const std::string& text);

/// Level-curve tracing request for the `levelsets` command.
struct LevelSetRequest {
  std::vector<int> families;    ///< subset of {1, 2}
  std::vector<double> levels;   ///< positive levels c
  double m_min = 0.05;
  double m_max = 3.0;
  std::size_t m_count = 101;
};

/// Keys: levels (comma-separated positive reals, required), family (1 | 2 |
/// 1,2), m_min, m_max, m_count. Same line format and error reporting as
/// parse_config.
LevelSetRequest parse_levelsets_config(const std::string& text);

/// State probe for the `eigen` command. Keys: v, m (both required).
struct EigenRequest {
  double v = 0.0;
  double m = 1.0;
};

EigenRequest parse_eigen_config(const std::string& text);

/// Dispatches on epsilon: 0 runs the hyperbolic solver, positive the
/// viscous one.
Trajectory run_simulation(const SimConfig& config);

/// One rung of the refinement study; observed_order is NaN on the coarsest
/// rung and log2(previous_l1 / l1) afterwards.
struct ConvergenceRow {
  std::size_t n_cells = 0;
  double l1_error = 0.0;
  double linf_error = 0.0;
  double observed_order = 0.0;
};

/// Runs the hyperbolic solver for the LinearExact model on grids
/// {n, 2n, 4n} (n from config) to t_end and measures combined v + m errors
/// against the closed-form reference; v is compared against a tight central
/// difference of the reference potential. Requires model = linear,
/// epsilon = 0, and u0. Rungs run concurrently.
std::vector<ConvergenceRow> convergence_study(const SimConfig& base);

/// Executes the command: writes fields.csv + diagnostics.csv (simulate),
/// levelsets.csv (levelsets), errors.csv (convergence-study), plus a
/// manifest.txt echoing resolved settings; `eigen` prints its report to
/// stdout. Returns a process exit status: 0 success, 2 config error,
/// 3 runtime failure (e.g. positivity loss), 4 I/O error.
int run(const RunManifest& manifest);

}  // namespace ffmfg
