#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ffmfg {

/// Raised when a solver update produces a non-positive density. Carries the
/// simulation time and cell where positivity was lost.
class positivity_error : public std::runtime_error {
public:
  positivity_error(double time, std::size_t cell, double center, double value)
      : std::runtime_error("density positivity lost at t=" + std::to_string(time) +
                           ", cell " + std::to_string(cell) + " (x=" + std::to_string(center) +
                           "): m=" + std::to_string(value)),
        time(time), cell(cell), center(center), value(value) {}

  double time;
  std::size_t cell;
  double center;
  double value;
};

/// Raised by the config parser; `line` is the 1-based offending line, 0 when
/// the problem is not tied to a single line.
class config_error : public std::runtime_error {
public:
  explicit config_error(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line(line) {}

  int line;
};

}  // namespace ffmfg
