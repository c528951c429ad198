#include "ffmfg/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "ffmfg/csv.hpp"
#include "ffmfg/errors.hpp"
#include "ffmfg/exact.hpp"
#include "ffmfg/expr.hpp"
#include "ffmfg/hyperbolic.hpp"
#include "ffmfg/models.hpp"
#include "ffmfg/parabolic.hpp"
#include "ffmfg/riemann.hpp"

namespace ffmfg {

namespace {

struct RawConfig {
  std::map<std::string, std::string> values;
  std::map<std::string, int> lines;

  int line_of(const std::string& key) const {
    const auto it = lines.find(key);
    return it == lines.end() ? 0 : it->second;
  }
  bool has(const std::string& key) const { return values.count(key) != 0; }
};

std::string trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(ws);
  return std::string(s.substr(begin, end - begin + 1));
}

RawConfig tokenize_config(const std::string& text) {
  RawConfig raw;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw config_error("expected `key = value`", line_no);
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) throw config_error("missing key before '='", line_no);
    if (value.empty()) throw config_error("missing value for key '" + key + "'", line_no);
    if (raw.values.count(key)) throw config_error("duplicate key '" + key + "'", line_no);
    raw.values[key] = value;
    raw.lines[key] = line_no;
  }
  return raw;
}

void reject_unknown_keys(const RawConfig& raw, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : raw.values)
    if (!allowed.count(key))
      throw config_error("unknown key '" + key + "'", raw.line_of(key));
}

double parse_double_value(const RawConfig& raw, const std::string& key, double fallback) {
  if (!raw.has(key)) return fallback;
  const std::string& text = raw.values.at(key);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw config_error("key '" + key + "' expects a number, got '" + text + "'",
                       raw.line_of(key));
  return value;
}

std::uint64_t parse_uint_value(const RawConfig& raw, const std::string& key,
                               std::uint64_t fallback) {
  if (!raw.has(key)) return fallback;
  const std::string& text = raw.values.at(key);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw config_error("key '" + key + "' expects a nonnegative integer, got '" + text + "'",
                       raw.line_of(key));
  return value;
}

bool parse_bool_value(const RawConfig& raw, const std::string& key, bool fallback) {
  if (!raw.has(key)) return fallback;
  const std::string& text = raw.values.at(key);
  if (text == "true") return true;
  if (text == "false") return false;
  throw config_error("key '" + key + "' expects true or false, got '" + text + "'",
                     raw.line_of(key));
}

Expr parse_expression(const RawConfig& raw, const std::string& key, std::mt19937_64& rng) {
  try {
    return Expr::parse(raw.values.at(key), rng);
  } catch (const std::invalid_argument& e) {
    throw config_error("key '" + key + "': " + e.what(), raw.line_of(key));
  }
}

std::string model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::QuadraticQuadratic: return "qq";
    case ModelKind::PSystem: return "psystem";
    case ModelKind::LinearExact: return "linear";
  }
  return "?";
}

std::string coupling_name(Coupling g) {
  switch (g) {
    case Coupling::Identity: return "identity";
    case Coupling::Logarithm: return "logarithm";
    case Coupling::HalfSquare: return "halfsquare";
  }
  return "?";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::ios_base::failure("read failed for " + path.string());
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content,
                     bool overwrite) {
  if (!overwrite && std::filesystem::exists(path))
    throw std::ios_base::failure("refusing to overwrite existing file " + path.string() +
                                 " (pass --force to allow)");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::ios_base::failure("cannot open " + path.string() + " for writing");
  out << content;
  out.close();
  if (out.fail()) throw std::ios_base::failure("write failed for " + path.string());
}

std::string config_echo(const SimConfig& config) {
  std::ostringstream out;
  out << "model=" << model_name(config.model.kind) << '\n';
  if (config.model.kind == ModelKind::LinearExact)
    out << "g=" << coupling_name(config.model.g) << '\n';
  out << "n_cells=" << config.grid.n_cells << '\n'
      << "length=" << format_double(config.grid.length) << '\n'
      << "t_end=" << format_double(config.t_end) << '\n'
      << "cfl=" << format_double(config.cfl) << '\n'
      << "epsilon=" << format_double(config.epsilon) << '\n'
      << "snapshot_interval=" << format_double(config.snapshot_interval) << '\n';
  if (!config.u0_text.empty()) out << "u0=" << config.u0_text << '\n';
  if (!config.v0_text.empty()) out << "v0=" << config.v0_text << '\n';
  out << "m0=" << config.m0_text << '\n'
      << "seed=" << config.seed << '\n'
      << "recenter=" << (config.recenter_initial ? "true" : "false") << '\n';
  return out.str();
}

std::string invariant_cell(double v, double m, int which) {
  if (!(m > 0.0)) return "nan";
  const auto w = riemann_invariants(v, m);
  return format_double(which == 1 ? w[0] : w[1]);
}

void write_fields_csv(const std::filesystem::path& path, const Trajectory& trajectory,
                      bool overwrite) {
  CsvWriter csv(path, overwrite);
  csv.write_row({"t", "x", "v", "m", "w1", "w2"});
  for (const StateField& snapshot : trajectory.snapshots) {
    const std::string t = format_double(snapshot.time);
    for (std::size_t i = 0; i < snapshot.grid.n_cells; ++i) {
      csv.write_row({t, format_double(snapshot.grid.centers[i]), format_double(snapshot.v[i]),
                     format_double(snapshot.m[i]),
                     invariant_cell(snapshot.v[i], snapshot.m[i], 1),
                     invariant_cell(snapshot.v[i], snapshot.m[i], 2)});
    }
  }
  csv.close();
}

void write_diagnostics_csv(const std::filesystem::path& path, const Trajectory& trajectory,
                           bool overwrite) {
  CsvWriter csv(path, overwrite);
  csv.write_row({"t", "mass", "mean_v", "l1_v", "l1_m", "min_m", "max_w1", "max_w2"});
  for (const DiagnosticsRecord& rec : trajectory.diagnostics) {
    csv.write_row({format_double(rec.time), format_double(rec.mass), format_double(rec.mean_v),
                   format_double(rec.l1_v), format_double(rec.l1_m), format_double(rec.min_m),
                   format_double(rec.max_w1), format_double(rec.max_w2)});
  }
  csv.close();
}

int run_simulate(const RunManifest& manifest, const std::string& config_text) {
  const SimConfig config = parse_config(config_text);
  std::filesystem::create_directories(manifest.out_dir);
  const Trajectory trajectory = run_simulation(config);
  write_text_file(manifest.out_dir / "manifest.txt",
                  "command=simulate\n" + config_echo(config), manifest.force);
  write_fields_csv(manifest.out_dir / "fields.csv", trajectory, manifest.force);
  write_diagnostics_csv(manifest.out_dir / "diagnostics.csv", trajectory, manifest.force);
  return 0;
}

int run_levelsets(const RunManifest& manifest, const std::string& config_text) {
  const LevelSetRequest request = parse_levelsets_config(config_text);
  std::filesystem::create_directories(manifest.out_dir);

  std::vector<double> m_values(request.m_count);
  if (request.m_count == 1) {
    m_values[0] = request.m_min;
  } else {
    const double dm = (request.m_max - request.m_min) / static_cast<double>(request.m_count - 1);
    for (std::size_t i = 0; i < request.m_count; ++i)
      m_values[i] = request.m_min + static_cast<double>(i) * dm;
  }

  std::ostringstream echo;
  echo << "command=levelsets\nm_min=" << format_double(request.m_min)
       << "\nm_max=" << format_double(request.m_max) << "\nm_count=" << request.m_count << '\n';
  echo << "levels=";
  for (std::size_t i = 0; i < request.levels.size(); ++i)
    echo << (i ? "," : "") << format_double(request.levels[i]);
  echo << "\nfamily=";
  for (std::size_t i = 0; i < request.families.size(); ++i)
    echo << (i ? "," : "") << request.families[i];
  echo << '\n';
  write_text_file(manifest.out_dir / "manifest.txt", echo.str(), manifest.force);

  CsvWriter csv(manifest.out_dir / "levelsets.csv", manifest.force);
  csv.write_row({"which", "c", "v", "m"});
  for (int family : request.families) {
    for (double c : request.levels) {
      const LevelCurve curve = level_curve(family, c, m_values);
      const std::string which = std::to_string(family);
      const std::string level = format_double(c);
      for (const auto& [v, m] : curve.points)
        csv.write_row({which, level, format_double(v), format_double(m)});
    }
  }
  csv.close();
  return 0;
}

int run_eigen(const std::string& config_text) {
  const EigenRequest request = parse_eigen_config(config_text);
  const EigenPair pair = eigen_qq(request.v, request.m);
  const auto gnl = gnl_indicators(request.v, request.m);
  const auto w = riemann_invariants(request.v, request.m);

  std::cout << "v=" << format_double(request.v) << '\n'
            << "m=" << format_double(request.m) << '\n'
            << "lambda1=" << format_double(pair.lambda1) << '\n'
            << "lambda2=" << format_double(pair.lambda2) << '\n'
            << "r1=" << format_double(pair.r1[0]) << ',' << format_double(pair.r1[1]) << '\n'
            << "r2=" << format_double(pair.r2[0]) << ',' << format_double(pair.r2[1]) << '\n'
            << "gnl1=" << format_double(gnl[0]) << '\n'
            << "gnl2=" << format_double(gnl[1]) << '\n'
            << "singular_residual=" << format_double(singular_residual(request.v, request.m))
            << '\n'
            << "w1=" << format_double(w[0]) << '\n'
            << "w2=" << format_double(w[1]) << '\n';
  return 0;
}

int run_convergence_study(const RunManifest& manifest, const std::string& config_text) {
  const SimConfig config = parse_config(config_text);
  const std::vector<ConvergenceRow> rows = convergence_study(config);
  std::filesystem::create_directories(manifest.out_dir);
  write_text_file(manifest.out_dir / "manifest.txt",
                  "command=convergence-study\n" + config_echo(config), manifest.force);

  CsvWriter csv(manifest.out_dir / "errors.csv", manifest.force);
  csv.write_row({"n_cells", "l1_error", "linf_error", "observed_order"});
  for (const ConvergenceRow& row : rows)
    csv.write_row({std::to_string(row.n_cells), format_double(row.l1_error),
                   format_double(row.linf_error), format_double(row.observed_order)});
  csv.close();
  return 0;
}

}  // namespace

SimConfig parse_config(const std::string& text) {
  const RawConfig raw = tokenize_config(text);
  reject_unknown_keys(raw, {"model", "n_cells", "length", "t_end", "cfl", "epsilon",
                            "snapshot_interval", "v0", "m0", "u0", "g", "seed", "recenter"});

  SimConfig config;

  if (raw.has("model")) {
    const std::string& name = raw.values.at("model");
    if (name == "qq") {
      config.model.kind = ModelKind::QuadraticQuadratic;
    } else if (name == "psystem") {
      config.model.kind = ModelKind::PSystem;
    } else if (name == "linear") {
      config.model.kind = ModelKind::LinearExact;
    } else {
      throw config_error("model must be qq, psystem, or linear; got '" + name + "'",
                         raw.line_of("model"));
    }
  }

  if (raw.has("g")) {
    if (config.model.kind != ModelKind::LinearExact)
      throw config_error("key 'g' applies to the linear model only", raw.line_of("g"));
    const std::string& name = raw.values.at("g");
    if (name == "identity") {
      config.model.g = Coupling::Identity;
    } else if (name == "logarithm") {
      config.model.g = Coupling::Logarithm;
    } else if (name == "halfsquare") {
      config.model.g = Coupling::HalfSquare;
    } else {
      throw config_error("g must be identity, logarithm, or halfsquare; got '" + name + "'",
                         raw.line_of("g"));
    }
    config.g_text = name;
  }

  if (!raw.has("n_cells")) throw config_error("missing required key 'n_cells'");
  const std::uint64_t n_cells = parse_uint_value(raw, "n_cells", 0);
  if (n_cells < 2)
    throw config_error("n_cells must be at least 2", raw.line_of("n_cells"));

  const double length = parse_double_value(raw, "length", 1.0);
  if (!(length > 0.0) || !std::isfinite(length))
    throw config_error("length must be positive and finite", raw.line_of("length"));
  config.grid = make_grid(static_cast<std::size_t>(n_cells), length);

  if (!raw.has("t_end")) throw config_error("missing required key 't_end'");
  config.t_end = parse_double_value(raw, "t_end", 0.0);
  if (!(config.t_end > 0.0) || !std::isfinite(config.t_end))
    throw config_error("t_end must be positive and finite", raw.line_of("t_end"));

  config.cfl = parse_double_value(raw, "cfl", 0.9);
  if (!(config.cfl > 0.0) || config.cfl > 1.0)
    throw config_error("cfl must lie in (0, 1]", raw.line_of("cfl"));

  config.epsilon = parse_double_value(raw, "epsilon", 0.0);
  if (config.epsilon < 0.0 || !std::isfinite(config.epsilon))
    throw config_error("epsilon must be nonnegative and finite", raw.line_of("epsilon"));

  config.snapshot_interval = parse_double_value(raw, "snapshot_interval", 0.0);
  if (config.snapshot_interval < 0.0 || !std::isfinite(config.snapshot_interval))
    throw config_error("snapshot_interval must be nonnegative and finite",
                       raw.line_of("snapshot_interval"));

  config.seed = parse_uint_value(raw, "seed", 0);
  config.recenter_initial = parse_bool_value(raw, "recenter", false);

  if (raw.has("v0") == raw.has("u0"))
    throw config_error("exactly one of 'v0' and 'u0' must be given",
                       raw.has("v0") ? raw.line_of("u0") : 0);
  if (!raw.has("m0")) throw config_error("missing required key 'm0'");

  // randomtrig draws are consumed in the fixed order u0-or-v0, then m0, so a
  // seed pins the whole initial condition regardless of line order.
  std::mt19937_64 rng(config.seed);
  Expr v0_expr;
  if (raw.has("u0")) {
    const Expr u0_expr = parse_expression(raw, "u0", rng);
    v0_expr = u0_expr.derivative();
    config.u0 = u0_expr;
    config.u0_text = raw.values.at("u0");
  } else {
    v0_expr = parse_expression(raw, "v0", rng);
    config.v0_text = raw.values.at("v0");
  }
  const Expr m0_expr = parse_expression(raw, "m0", rng);
  config.v0 = v0_expr;
  config.m0 = m0_expr;
  config.m0_text = raw.values.at("m0");

  for (double x : config.grid.centers) {
    const double v_value = v0_expr(x);
    const double m_value = m0_expr(x);
    if (!std::isfinite(v_value))
      throw config_error("initial data is not finite at x=" + format_double(x),
                         raw.has("u0") ? raw.line_of("u0") : raw.line_of("v0"));
    if (!std::isfinite(m_value))
      throw config_error("m0 is not finite at x=" + format_double(x), raw.line_of("m0"));
    if (config.model.kind != ModelKind::PSystem && !(m_value > 0.0))
      throw config_error("m0 must be strictly positive; m0(" + format_double(x) +
                             ")=" + format_double(m_value),
                         raw.line_of("m0"));
  }
  return config;
}

LevelSetRequest parse_levelsets_config(const std::string& text) {
  const RawConfig raw = tokenize_config(text);
  reject_unknown_keys(raw, {"levels", "family", "m_min", "m_max", "m_count"});

  LevelSetRequest request;
  if (!raw.has("levels")) throw config_error("missing required key 'levels'");
  {
    const std::string& list = raw.values.at("levels");
    std::istringstream stream(list);
    std::string item;
    while (std::getline(stream, item, ',')) {
      const std::string value = trim(item);
      double c = 0.0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), c);
      if (ec != std::errc() || ptr != value.data() + value.size() || !(c > 0.0))
        throw config_error("levels expects comma-separated positive numbers, got '" + item + "'",
                           raw.line_of("levels"));
      request.levels.push_back(c);
    }
    if (request.levels.empty())
      throw config_error("levels must contain at least one value", raw.line_of("levels"));
  }

  if (raw.has("family")) {
    const std::string& list = raw.values.at("family");
    std::istringstream stream(list);
    std::string item;
    request.families.clear();
    while (std::getline(stream, item, ',')) {
      const std::string value = trim(item);
      if (value == "1" || value == "2") {
        const int family = value == "1" ? 1 : 2;
        if (std::find(request.families.begin(), request.families.end(), family) !=
            request.families.end())
          throw config_error("family lists 1 and 2 at most once each", raw.line_of("family"));
        request.families.push_back(family);
      } else {
        throw config_error("family expects 1, 2, or 1,2; got '" + item + "'",
                           raw.line_of("family"));
      }
    }
    if (request.families.empty())
      throw config_error("family must contain at least one value", raw.line_of("family"));
  } else {
    request.families = {1, 2};
  }

  request.m_min = parse_double_value(raw, "m_min", request.m_min);
  request.m_max = parse_double_value(raw, "m_max", request.m_max);
  const std::uint64_t m_count = parse_uint_value(raw, "m_count", request.m_count);
  if (!(request.m_min > 0.0))
    throw config_error("m_min must be positive", raw.line_of("m_min"));
  if (!(request.m_max >= request.m_min))
    throw config_error("m_max must be at least m_min", raw.line_of("m_max"));
  if (m_count < 1) throw config_error("m_count must be at least 1", raw.line_of("m_count"));
  request.m_count = static_cast<std::size_t>(m_count);
  return request;
}

EigenRequest parse_eigen_config(const std::string& text) {
  const RawConfig raw = tokenize_config(text);
  reject_unknown_keys(raw, {"v", "m"});
  if (!raw.has("v")) throw config_error("missing required key 'v'");
  if (!raw.has("m")) throw config_error("missing required key 'm'");

  EigenRequest request;
  request.v = parse_double_value(raw, "v", 0.0);
  request.m = parse_double_value(raw, "m", 0.0);
  if (!(request.m > 0.0)) throw config_error("m must be positive", raw.line_of("m"));
  return request;
}

Trajectory run_simulation(const SimConfig& config) {
  return config.epsilon == 0.0 ? evolve(config) : evolve_viscous(config);
}

std::vector<ConvergenceRow> convergence_study(const SimConfig& base) {
  if (base.model.kind != ModelKind::LinearExact)
    throw config_error("convergence-study requires model = linear");
  if (base.epsilon != 0.0)
    throw config_error("convergence-study requires epsilon = 0");
  if (!base.u0)
    throw config_error("convergence-study requires the initial data as u0");

  const LinearCaseData data{base.u0, base.m0, base.model.g, base.grid.length};
  const double t_end = base.t_end;

  auto measure_rung = [&base, &data, t_end](std::size_t n_cells) {
    SimConfig config = base;
    config.grid = make_grid(n_cells, base.grid.length);
    config.snapshot_interval = 0.0;
    const Trajectory trajectory = evolve(config);
    const StateField& last = trajectory.snapshots.back();

    const double h = 1e-6;
    double l1 = 0.0, linf = 0.0;
    for (std::size_t i = 0; i < last.grid.n_cells; ++i) {
      const double x = last.grid.centers[i];
      const double v_exact =
          (linear_u(data, x + h, t_end) - linear_u(data, x - h, t_end)) / (2.0 * h);
      const double m_exact = linear_m(data, x, t_end);
      const double err_v = std::abs(last.v[i] - v_exact);
      const double err_m = std::abs(last.m[i] - m_exact);
      l1 += (err_v + err_m) * last.grid.dx;
      linf = std::max({linf, err_v, err_m});
    }
    return std::pair<double, double>{l1, linf};
  };

  const std::size_t n = base.grid.n_cells;
  const std::vector<std::size_t> ladder = {n, 2 * n, 4 * n};
  std::vector<std::future<std::pair<double, double>>> futures;
  futures.reserve(ladder.size());
  for (std::size_t rung : ladder)
    futures.push_back(std::async(std::launch::async, measure_rung, rung));

  std::vector<ConvergenceRow> rows;
  rows.reserve(ladder.size());
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    const auto [l1, linf] = futures[k].get();
    ConvergenceRow row;
    row.n_cells = ladder[k];
    row.l1_error = l1;
    row.linf_error = linf;
    row.observed_order = k == 0 ? std::numeric_limits<double>::quiet_NaN()
                                : std::log2(rows[k - 1].l1_error / l1);
    rows.push_back(row);
  }
  return rows;
}

int run(const RunManifest& manifest) {
  try {
    const std::string config_text = read_text_file(manifest.config_path);
    switch (manifest.command) {
      case Command::Simulate: return run_simulate(manifest, config_text);
      case Command::LevelSets: return run_levelsets(manifest, config_text);
      case Command::Eigen: return run_eigen(config_text);
      case Command::ConvergenceStudy: return run_convergence_study(manifest, config_text);
    }
    std::cerr << "error: unknown command\n";
    return 2;
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const positivity_error& e) {
    std::cerr << "runtime error: " << e.what() << '\n';
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 4;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace ffmfg
