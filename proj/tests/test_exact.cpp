#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ffmfg/exact.hpp"
#include "ffmfg/grid.hpp"
#include "ffmfg/models.hpp"

using namespace ffmfg;
using std::numbers::pi;

namespace {

LinearCaseData flat_case() {
  LinearCaseData data;
  data.u0 = [](double) { return 0.0; };
  data.m0 = [](double) { return 1.0; };
  data.g = Coupling::Identity;
  data.length = 1.0;
  return data;
}

LinearCaseData wavy_case() {
  LinearCaseData data;
  data.u0 = [](double x) { return std::sin(2 * pi * x); };
  data.m0 = [](double x) { return 1.0 + 0.5 * std::sin(2 * pi * x); };
  data.g = Coupling::Identity;
  data.length = 1.0;
  return data;
}

}  // namespace

TEST_CASE("linear_u with unit density grows linearly in time") {
  const LinearCaseData data = flat_case();
  for (double x : {0.0, 0.3, 0.9}) {
    for (double t : {0.0, 0.1, 1.7}) {
      CHECK(std::abs(linear_u(data, x, t) - t) <= 1e-12);
      CHECK(linear_m(data, x, t) == 1.0);
    }
  }
  CHECK_THROWS_AS(linear_u(data, 0.0, -0.1), std::invalid_argument);
}

TEST_CASE("linear_u transports the initial profile and adds the coupling average") {
  LinearCaseData data = flat_case();
  data.u0 = [](double x) { return std::sin(2 * pi * x); };
  for (double x : {0.1, 0.5, 0.8}) {
    for (double t : {0.05, 0.37, 2.0}) {
      const double expected = std::sin(2 * pi * (x - t)) + t;
      CHECK(std::abs(linear_u(data, x, t) - expected) <= 1e-12);
    }
  }
}

TEST_CASE("linear_u at the quarter-period probe point") {
  LinearCaseData data = flat_case();
  data.m0 = [](double s) { return 1.0 + 0.5 * std::sin(2 * pi * s); };
  CHECK(std::abs(linear_u(data, 0.0, 0.25) - 0.25) <= 1e-12);
  CHECK(linear_m(data, 0.0, 0.25) == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("linear solution reduces to the initial data at t = 0") {
  const LinearCaseData data = wavy_case();
  for (double x : {0.0, 0.123, 0.77}) {
    CHECK(linear_u(data, x, 0.0) == data.u0(x));
    CHECK(linear_m(data, x, 0.0) == data.m0(x));
  }
}

TEST_CASE("linear_residuals vanish at second order in the step") {
  const LinearCaseData data = wavy_case();

  const LinearCaseData flat = flat_case();
  const auto flat_res = linear_residuals(flat, 0.4, 0.1, 1e-4);
  CHECK(std::abs(flat_res[0]) <= 1e-12);
  CHECK(std::abs(flat_res[1]) <= 1e-12);

  double coarse = 0.0, fine = 0.0;
  for (double x : {0.05, 0.31, 0.62, 0.9}) {
    for (double t : {0.13, 0.4, 0.77}) {
      const auto rc = linear_residuals(data, x, t, 1e-4);
      const auto rf = linear_residuals(data, x, t, 5e-5);
      coarse = std::max({coarse, std::abs(rc[0]), std::abs(rc[1])});
      fine = std::max({fine, std::abs(rf[0]), std::abs(rf[1])});
    }
  }
  CHECK(coarse <= 1e-6);
  const double ratio = coarse / fine;
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 5.0);

  CHECK_THROWS_AS(linear_residuals(data, 0.0, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(linear_residuals(data, 0.0, 0.5, 2e-3), std::invalid_argument);
  CHECK_THROWS_AS(linear_residuals(data, 0.0, 1e-5, 1e-4), std::invalid_argument);
}

TEST_CASE("linear_residuals work for the nonlinear couplings") {
  LinearCaseData data = wavy_case();
  data.g = Coupling::Logarithm;
  const auto r = linear_residuals(data, 0.3, 0.45, 1e-4);
  CHECK(std::abs(r[0]) <= 1e-6);
  CHECK(std::abs(r[1]) <= 1e-6);

  data.g = Coupling::HalfSquare;
  const auto r2 = linear_residuals(data, 0.3, 0.45, 1e-4);
  CHECK(std::abs(r2[0]) <= 1e-6);
  CHECK(std::abs(r2[1]) <= 1e-6);
}

TEST_CASE("transporting the density the wrong way leaves an order-one defect") {
  const LinearCaseData data = wavy_case();
  const double x = 0.3, t = 0.37, h = 1e-4;
  const double ut = (linear_u(data, x, t + h) - linear_u(data, x, t - h)) / (2 * h);
  const double ux = (linear_u(data, x + h, t) - linear_u(data, x - h, t)) / (2 * h);
  const double wrong =
      ut + ux - coupling_value(data.g, data.m0(wrap_coordinate(x - t, data.length)));
  CHECK(std::abs(wrong) > 0.01);
  const double right =
      ut + ux - coupling_value(data.g, data.m0(wrap_coordinate(x + t, data.length)));
  CHECK(std::abs(right) <= 1e-6);
}

TEST_CASE("dalembert_check accepts exact affine data") {
  const PeriodicGrid grid = make_grid(4, 1.0);
  const double dt = 0.125;
  std::vector<std::vector<double>> u(4, std::vector<double>(4));
  for (std::size_t n = 0; n < 4; ++n)
    for (std::size_t i = 0; i < 4; ++i)
      u[n][i] = 1.0 + 3.0 * (static_cast<double>(n) * dt);
  CHECK(dalembert_check(u, grid, dt) == 0.0);
}

TEST_CASE("dalembert_check sees a travelling wave as a wave-equation solution") {
  const std::size_t n = 1000;
  const PeriodicGrid grid = make_grid(n, 1.0);
  const double dt = grid.dx;
  std::vector<std::vector<double>> u(5, std::vector<double>(n));
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t i = 0; i < n; ++i)
      u[r][i] = std::sin(2 * pi * (grid.centers[i] - static_cast<double>(r) * dt));
  CHECK(dalembert_check(u, grid, dt) <= 1e-6);
}

TEST_CASE("dalembert_check confirms the closed-form potential solves the wave equation") {
  const LinearCaseData data = wavy_case();
  const auto residual_at = [&](std::size_t n, double dt) {
    const PeriodicGrid grid = make_grid(n, 1.0);
    std::vector<std::vector<double>> u(5, std::vector<double>(n));
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t i = 0; i < n; ++i)
        u[r][i] = linear_u(data, grid.centers[i], 0.1 + static_cast<double>(r) * dt);
    return dalembert_check(u, grid, dt);
  };
  const double coarse = residual_at(64, 1.0 / 128.0);
  const double fine = residual_at(128, 1.0 / 256.0);
  CHECK(coarse <= 0.1);
  const double ratio = coarse / fine;
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 5.0);
}

TEST_CASE("dalembert_check rejects tiny or ragged lattices") {
  const PeriodicGrid grid = make_grid(4, 1.0);
  std::vector<std::vector<double>> two_rows(2, std::vector<double>(4, 0.0));
  CHECK_THROWS_AS(dalembert_check(two_rows, grid, 0.1), std::invalid_argument);
  std::vector<std::vector<double>> ragged(3, std::vector<double>(4, 0.0));
  ragged[1].resize(3);
  CHECK_THROWS_AS(dalembert_check(ragged, grid, 0.1), std::invalid_argument);
  const PeriodicGrid narrow = make_grid(2, 1.0);
  std::vector<std::vector<double>> two_cols(3, std::vector<double>(2, 0.0));
  CHECK_THROWS_AS(dalembert_check(two_cols, narrow, 0.1), std::invalid_argument);
}
