#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <sstream>
#include <string>

#include "ffmfg/cli.hpp"
#include "ffmfg/csv.hpp"
#include "ffmfg/diagnostics.hpp"
#include "ffmfg/errors.hpp"
#include "ffmfg/exact.hpp"
#include "ffmfg/grid.hpp"
#include "ffmfg/hyperbolic.hpp"
#include "ffmfg/models.hpp"
#include "ffmfg/parabolic.hpp"
#include "ffmfg/quadrature.hpp"
#include "ffmfg/riemann.hpp"
#include "ffmfg/sim.hpp"

namespace py = pybind11;

namespace {

ffmfg::ModelSpec make_model_spec(const std::string& kind, const std::string& g) {
  ffmfg::ModelSpec spec;
  if (kind == "qq") {
    spec.kind = ffmfg::ModelKind::QuadraticQuadratic;
  } else if (kind == "psystem") {
    spec.kind = ffmfg::ModelKind::PSystem;
  } else if (kind == "linear") {
    spec.kind = ffmfg::ModelKind::LinearExact;
  } else {
    throw std::invalid_argument("model kind must be qq, psystem, or linear");
  }
  if (g == "identity") {
    spec.g = ffmfg::Coupling::Identity;
  } else if (g == "logarithm") {
    spec.g = ffmfg::Coupling::Logarithm;
  } else if (g == "halfsquare") {
    spec.g = ffmfg::Coupling::HalfSquare;
  } else {
    throw std::invalid_argument("coupling must be identity, logarithm, or halfsquare");
  }
  return spec;
}

ffmfg::SimConfig make_config(const std::string& model, std::size_t n_cells, double t_end,
                             const std::string& v0, const std::string& m0,
                             const std::string& u0, const std::string& g, double length,
                             double cfl, double epsilon, double snapshot_interval,
                             std::uint64_t seed, bool recenter) {
  std::ostringstream text;
  text << "model=" << model << '\n'
       << "n_cells=" << n_cells << '\n'
       << "t_end=" << ffmfg::format_double(t_end) << '\n'
       << "length=" << ffmfg::format_double(length) << '\n'
       << "cfl=" << ffmfg::format_double(cfl) << '\n'
       << "epsilon=" << ffmfg::format_double(epsilon) << '\n'
       << "snapshot_interval=" << ffmfg::format_double(snapshot_interval) << '\n'
       << "seed=" << seed << '\n'
       << "recenter=" << (recenter ? "true" : "false") << '\n';
  if (!v0.empty()) text << "v0=" << v0 << '\n';
  if (!u0.empty()) text << "u0=" << u0 << '\n';
  if (!m0.empty()) text << "m0=" << m0 << '\n';
  if (!g.empty()) text << "g=" << g << '\n';
  return ffmfg::parse_config(text.str());
}

}  // namespace

PYBIND11_MODULE(ffmfg, m) {
  m.doc() = "1-D mean-field-game conservation-law laboratory";

  py::register_exception<ffmfg::config_error>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ffmfg::positivity_error>(m, "PositivityError", PyExc_RuntimeError);

  py::class_<ffmfg::PeriodicGrid>(m, "PeriodicGrid")
      .def_readonly("n_cells", &ffmfg::PeriodicGrid::n_cells)
      .def_readonly("length", &ffmfg::PeriodicGrid::length)
      .def_readonly("dx", &ffmfg::PeriodicGrid::dx)
      .def_readonly("centers", &ffmfg::PeriodicGrid::centers);

  py::class_<ffmfg::StateField>(m, "StateField")
      .def_readonly("grid", &ffmfg::StateField::grid)
      .def_readonly("v", &ffmfg::StateField::v)
      .def_readonly("m", &ffmfg::StateField::m)
      .def_readonly("time", &ffmfg::StateField::time);

  py::class_<ffmfg::DiagnosticsRecord>(m, "DiagnosticsRecord")
      .def_readonly("time", &ffmfg::DiagnosticsRecord::time)
      .def_readonly("mass", &ffmfg::DiagnosticsRecord::mass)
      .def_readonly("mean_v", &ffmfg::DiagnosticsRecord::mean_v)
      .def_readonly("l1_v", &ffmfg::DiagnosticsRecord::l1_v)
      .def_readonly("l1_m", &ffmfg::DiagnosticsRecord::l1_m)
      .def_readonly("min_m", &ffmfg::DiagnosticsRecord::min_m)
      .def_readonly("max_w1", &ffmfg::DiagnosticsRecord::max_w1)
      .def_readonly("max_w2", &ffmfg::DiagnosticsRecord::max_w2)
      .def_readonly("min_w1", &ffmfg::DiagnosticsRecord::min_w1)
      .def_readonly("min_w2", &ffmfg::DiagnosticsRecord::min_w2);

  py::class_<ffmfg::Trajectory>(m, "Trajectory")
      .def_readonly("snapshots", &ffmfg::Trajectory::snapshots)
      .def_readonly("diagnostics", &ffmfg::Trajectory::diagnostics);

  py::class_<ffmfg::EigenPair>(m, "EigenPair")
      .def_readonly("lambda1", &ffmfg::EigenPair::lambda1)
      .def_readonly("lambda2", &ffmfg::EigenPair::lambda2)
      .def_readonly("r1", &ffmfg::EigenPair::r1)
      .def_readonly("r2", &ffmfg::EigenPair::r2);

  py::class_<ffmfg::ModelSpec>(m, "ModelSpec");
  py::class_<ffmfg::SimConfig>(m, "SimConfig")
      .def_readonly("t_end", &ffmfg::SimConfig::t_end)
      .def_readonly("epsilon", &ffmfg::SimConfig::epsilon)
      .def_readonly("seed", &ffmfg::SimConfig::seed);

  py::class_<ffmfg::InvariantDomain>(m, "InvariantDomain")
      .def(py::init([](double c1, double c2) {
             return ffmfg::InvariantDomain{c1, c2};
           }),
           py::arg("c1"), py::arg("c2"))
      .def_readonly("c1", &ffmfg::InvariantDomain::c1)
      .def_readonly("c2", &ffmfg::InvariantDomain::c2);

  py::class_<ffmfg::LevelCurve>(m, "LevelCurve")
      .def_readonly("points", &ffmfg::LevelCurve::points)
      .def_readonly("skipped_m", &ffmfg::LevelCurve::skipped_m);

  py::class_<ffmfg::LinearCaseData>(m, "LinearCaseData");

  py::class_<ffmfg::ConvergenceRow>(m, "ConvergenceRow")
      .def_readonly("n_cells", &ffmfg::ConvergenceRow::n_cells)
      .def_readonly("l1_error", &ffmfg::ConvergenceRow::l1_error)
      .def_readonly("linf_error", &ffmfg::ConvergenceRow::linf_error)
      .def_readonly("observed_order", &ffmfg::ConvergenceRow::observed_order);

  m.def("make_grid", &ffmfg::make_grid, py::arg("n_cells"), py::arg("length") = 1.0);
  m.def("sample_field", &ffmfg::sample_field, py::arg("grid"), py::arg("f_v"), py::arg("f_m"));
  m.def("sample_pair", &ffmfg::sample_pair, py::arg("grid"), py::arg("f_a"), py::arg("f_b"));
  m.def(
      "cell_mean",
      [](const ffmfg::PeriodicGrid& grid, const std::vector<double>& values) {
        return ffmfg::cell_mean(grid, values);
      },
      py::arg("grid"), py::arg("values"));

  m.def("model_spec", &make_model_spec, py::arg("kind"), py::arg("g") = "identity");
  m.def("flux_qq", &ffmfg::flux_qq, py::arg("v"), py::arg("m"));
  m.def("jacobian_qq", &ffmfg::jacobian_qq, py::arg("v"), py::arg("m"));
  m.def("eigen_qq", &ffmfg::eigen_qq, py::arg("v"), py::arg("m"));
  m.def("gnl_indicators", &ffmfg::gnl_indicators, py::arg("v"), py::arg("m"));
  m.def("singular_residual", &ffmfg::singular_residual, py::arg("v"), py::arg("m"));
  m.def("flux_psystem", &ffmfg::flux_psystem, py::arg("v"), py::arg("w"));
  m.def("psystem_stress", &ffmfg::psystem_stress, py::arg("z"));
  m.def("model_flux", &ffmfg::model_flux, py::arg("model"), py::arg("a"), py::arg("b"));
  m.def("spectral_radius", &ffmfg::spectral_radius, py::arg("model"), py::arg("a"),
        py::arg("b"));

  m.def("riemann_invariants", &ffmfg::riemann_invariants, py::arg("v"), py::arg("m"));
  m.def("riemann_gradients", &ffmfg::riemann_gradients, py::arg("v"), py::arg("m"));
  m.def("pde_residuals", &ffmfg::pde_residuals, py::arg("v"), py::arg("m"));
  m.def("domain_contains", &ffmfg::domain_contains, py::arg("domain"), py::arg("v"),
        py::arg("m"));
  m.def(
      "level_curve",
      [](int which, double c, const std::vector<double>& m_values) {
        return ffmfg::level_curve(which, c, m_values);
      },
      py::arg("which"), py::arg("c"), py::arg("m_values"));

  m.def(
      "linear_case",
      [](std::function<double(double)> u0, std::function<double(double)> m0,
         const std::string& g, double length) {
        ffmfg::LinearCaseData data;
        data.u0 = std::move(u0);
        data.m0 = std::move(m0);
        data.g = make_model_spec("linear", g).g;
        data.length = length;
        return data;
      },
      py::arg("u0"), py::arg("m0"), py::arg("g") = "identity", py::arg("length") = 1.0);
  m.def("linear_u", &ffmfg::linear_u, py::arg("data"), py::arg("x"), py::arg("t"));
  m.def("linear_m", &ffmfg::linear_m, py::arg("data"), py::arg("x"), py::arg("t"));
  m.def("linear_residuals", &ffmfg::linear_residuals, py::arg("data"), py::arg("x"),
        py::arg("t"), py::arg("h") = 1e-4);
  m.def("dalembert_check", &ffmfg::dalembert_check, py::arg("u_values"), py::arg("grid"),
        py::arg("dt"));
  m.def("integrate", &ffmfg::integrate, py::arg("f"), py::arg("a"), py::arg("b"),
        py::arg("abs_tol") = 1e-12);

  m.def(
      "numerical_flux",
      [](const ffmfg::ModelSpec& model, std::array<double, 2> left,
         std::array<double, 2> right) { return ffmfg::numerical_flux(model, left, right); },
      py::arg("model"), py::arg("left"), py::arg("right"));
  m.def("stable_dt", &ffmfg::stable_dt, py::arg("model"), py::arg("state"), py::arg("cfl"));
  m.def(
      "step",
      [](const ffmfg::ModelSpec& model, const ffmfg::StateField& state, double dt, double cfl,
         const std::string& flux) {
        const ffmfg::FluxKind kind = flux == "laxfriedrichs" ? ffmfg::FluxKind::LaxFriedrichs
                                                             : ffmfg::FluxKind::Rusanov;
        return ffmfg::step(model, ffmfg::HyperbolicScheme(cfl, kind), state, dt);
      },
      py::arg("model"), py::arg("state"), py::arg("dt"), py::arg("cfl") = 0.9,
      py::arg("flux") = "rusanov");
  m.def(
      "step_viscous",
      [](const ffmfg::ModelSpec& model, const ffmfg::StateField& state, double epsilon,
         double dt, double cfl, double diffusion_safety) {
        return ffmfg::step_viscous(model, ffmfg::ViscousScheme(cfl, diffusion_safety), state,
                                   epsilon, dt);
      },
      py::arg("model"), py::arg("state"), py::arg("epsilon"), py::arg("dt"),
      py::arg("cfl") = 0.9, py::arg("diffusion_safety") = 0.25);
  m.def("diffuse", &ffmfg::diffuse, py::arg("values"), py::arg("epsilon"), py::arg("dt"),
        py::arg("dx"));
  m.def("recenter", &ffmfg::recenter, py::arg("state"));

  m.def("make_config", &make_config, py::arg("model"), py::arg("n_cells"), py::arg("t_end"),
        py::arg("v0") = "", py::arg("m0") = "", py::arg("u0") = "", py::arg("g") = "",
        py::arg("length") = 1.0, py::arg("cfl") = 0.9, py::arg("epsilon") = 0.0,
        py::arg("snapshot_interval") = 0.0, py::arg("seed") = 0, py::arg("recenter") = false);
  m.def("parse_config", &ffmfg::parse_config, py::arg("text"));
  m.def("evolve", &ffmfg::evolve, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("evolve_viscous", &ffmfg::evolve_viscous, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run_simulation", &ffmfg::run_simulation, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("convergence_study", &ffmfg::convergence_study, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());

  m.def("record", &ffmfg::record, py::arg("state"));
  m.def("wave_residual_nonlinear", &ffmfg::wave_residual_nonlinear, py::arg("u_values"),
        py::arg("dx"), py::arg("dt"));
  m.def("conservation_drift", &ffmfg::conservation_drift, py::arg("trajectory"));
  m.def("invariant_extreme_drift", &ffmfg::invariant_extreme_drift, py::arg("trajectory"));
}
