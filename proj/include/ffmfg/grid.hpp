#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace ffmfg {

/// Uniform mesh of cell averages on a circle of circumference `length`.
struct PeriodicGrid {
  std::size_t n_cells = 0;
  double length = 0.0;
  double dx = 0.0;
  std::vector<double> centers;
};

/// Two coupled cell-average arrays advancing in time. `v` holds the first
/// conserved quantity (velocity-like), `m` the second (density for the
/// density-carrying models, elastic strain-rate pairing otherwise).
struct StateField {
  PeriodicGrid grid;
  std::vector<double> v;
  std::vector<double> m;
  double time = 0.0;
};

/// Builds a grid with cell centers (i + 1/2) * dx, i = 0..n_cells-1.
/// Requires n_cells >= 2 and length > 0.
PeriodicGrid make_grid(std::size_t n_cells, double length = 1.0);

/// Samples initial data at cell centers and enforces strict positivity of the
/// density component; throws std::invalid_argument when f_m dips to <= 0.
StateField sample_field(const PeriodicGrid& grid,
                        const std::function<double(double)>& f_v,
                        const std::function<double(double)>& f_m);

/// Same sampling without the sign constraint on the second component, for
/// systems whose second unknown may change sign.
StateField sample_pair(const PeriodicGrid& grid,
                       const std::function<double(double)>& f_a,
                       const std::function<double(double)>& f_b);

/// Arithmetic mean of cell values; on a uniform grid this equals
/// (1/length) * integral over the circle.
double cell_mean(const PeriodicGrid& grid, std::span<const double> values);

/// Maps x to its representative in [0, length).
double wrap_coordinate(double x, double length);

}  // namespace ffmfg
