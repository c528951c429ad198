#include "ffmfg/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ffmfg {

PeriodicGrid make_grid(std::size_t n_cells, double length) {
  if (n_cells < 2)
    throw std::invalid_argument("make_grid: need at least 2 cells, got " + std::to_string(n_cells));
  if (!(length > 0.0) || !std::isfinite(length))
    throw std::invalid_argument("make_grid: length must be positive and finite");

  PeriodicGrid grid;
  grid.n_cells = n_cells;
  grid.length = length;
  grid.dx = length / static_cast<double>(n_cells);
  grid.centers.resize(n_cells);
  for (std::size_t i = 0; i < n_cells; ++i)
    grid.centers[i] = (static_cast<double>(i) + 0.5) * grid.dx;
  return grid;
}

StateField sample_field(const PeriodicGrid& grid,
                        const std::function<double(double)>& f_v,
                        const std::function<double(double)>& f_m) {
  StateField field = sample_pair(grid, f_v, f_m);
  for (std::size_t i = 0; i < grid.n_cells; ++i) {
    if (!(field.m[i] > 0.0))
      throw std::invalid_argument("sample_field: density must be positive, got m=" +
                                  std::to_string(field.m[i]) + " at x=" +
                                  std::to_string(grid.centers[i]));
  }
  return field;
}

StateField sample_pair(const PeriodicGrid& grid,
                       const std::function<double(double)>& f_a,
                       const std::function<double(double)>& f_b) {
  if (grid.n_cells < 2 || grid.centers.size() != grid.n_cells)
    throw std::invalid_argument("sample_pair: malformed grid");

  StateField field;
  field.grid = grid;
  field.v.resize(grid.n_cells);
  field.m.resize(grid.n_cells);
  for (std::size_t i = 0; i < grid.n_cells; ++i) {
    field.v[i] = f_a(grid.centers[i]);
    field.m[i] = f_b(grid.centers[i]);
  }
  return field;
}

double cell_mean(const PeriodicGrid& grid, std::span<const double> values) {
  if (values.size() != grid.n_cells)
    throw std::invalid_argument("cell_mean: value count does not match grid");
  double sum = 0.0;
  for (double value : values) sum += value;
  return sum / static_cast<double>(grid.n_cells);
}

double wrap_coordinate(double x, double length) {
  double r = std::fmod(x, length);
  if (r < 0.0) r += length;
  return r;
}

}  // namespace ffmfg
