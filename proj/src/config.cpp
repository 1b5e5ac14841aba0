#include "burgers/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "burgers/errors.hpp"
#include "burgers/io.hpp"

namespace burgers {
namespace {

std::string type_name(const nlohmann::json& j) { return j.type_name(); }

// Runs f, turning any non-config exception into a ConfigError at `path`.
template <class F>
auto guarded(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(path, e.what());
  }
}

void check_schema(const nlohmann::json& root) {
  if (!root.is_object()) throw ConfigError("$", "configuration must be a JSON object");
  const ConfigNode node(root, "$");
  const long version = node.integer("schema_version");
  if (version != kSchemaVersion) {
    node.fail("schema_version", "unsupported version " + std::to_string(version) + " (expected " +
                                    std::to_string(kSchemaVersion) + ")");
  }
}

SimilarityFrame parse_frame(const ConfigNode& node, const char* nu_key = "nu") {
  const StrainModel strain = parse_strain(node.object("strain"));
  const double nu = node.number(nu_key);
  return guarded(node.path() + "." + nu_key, [&] { return SimilarityFrame(strain, nu); });
}

double solution_alpha(const ExactSolution& s) {
  return std::visit([](const auto& v) { return v.alpha(); }, s);
}

void check_alpha_matches(const ConfigNode& node, const std::string& key, const ExactSolution& s,
                         const SimilarityFrame& frame) {
  const double expected = alpha_of(frame.strain());
  if (std::abs(solution_alpha(s) - expected) > 1e-12 * std::max(1.0, std::abs(expected))) {
    node.fail(key, "solution alpha " + format_double(solution_alpha(s)) +
                       " does not match 1 - c1 = " + format_double(expected) + " of the strain model");
  }
}

Field1D physical_field(const ExactSolution& s, const SimilarityFrame& frame, const Grid1D& grid) {
  return Field1D::sample(grid, [&](double x) { return physical_omega(s, frame, x, 0.0); });
}

}  // namespace

ConfigNode::ConfigNode(const nlohmann::json& j, std::string path) : j_(&j), path_(std::move(path)) {
  if (!j.is_object()) throw ConfigError(path_, "expected an object, got " + type_name(j));
}

bool ConfigNode::has(const std::string& key) const { return j_->contains(key); }

void ConfigNode::allow_only(std::initializer_list<const char*> allowed) const {
  for (const auto& item : j_->items()) {
    const bool ok = std::any_of(allowed.begin(), allowed.end(),
                                [&](const char* a) { return item.key() == a; });
    if (!ok) fail(item.key(), "unknown key");
  }
}

void ConfigNode::fail(const std::string& key, const std::string& what) const {
  throw ConfigError(path_ + "." + key, what);
}

const nlohmann::json& ConfigNode::at(const std::string& key) const {
  const auto it = j_->find(key);
  if (it == j_->end()) fail(key, "missing required key");
  return *it;
}

ConfigNode ConfigNode::object(const std::string& key) const {
  const auto& v = at(key);
  if (!v.is_object()) fail(key, "expected an object, got " + type_name(v));
  return ConfigNode(v, path_ + "." + key);
}

double ConfigNode::number(const std::string& key) const {
  const auto& v = at(key);
  if (!v.is_number()) fail(key, "expected a number, got " + type_name(v));
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(key, "must be finite");
  return d;
}

double ConfigNode::number_or(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

long ConfigNode::integer(const std::string& key) const {
  const auto& v = at(key);
  if (!v.is_number_integer()) fail(key, "expected an integer, got " + type_name(v));
  return v.get<long>();
}

long ConfigNode::integer_or(const std::string& key, long fallback) const {
  return has(key) ? integer(key) : fallback;
}

std::string ConfigNode::string(const std::string& key) const {
  const auto& v = at(key);
  if (!v.is_string()) fail(key, "expected a string, got " + type_name(v));
  return v.get<std::string>();
}

std::string ConfigNode::string_or(const std::string& key, const std::string& fallback) const {
  return has(key) ? string(key) : fallback;
}

bool ConfigNode::boolean_or(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const auto& v = at(key);
  if (!v.is_boolean()) fail(key, "expected a boolean, got " + type_name(v));
  return v.get<bool>();
}

std::vector<double> ConfigNode::numbers(const std::string& key) const {
  const auto& v = at(key);
  if (!v.is_array()) fail(key, "expected an array, got " + type_name(v));
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) fail(key + "[" + std::to_string(i) + "]", "expected a number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

std::vector<long> ConfigNode::integers(const std::string& key) const {
  const auto& v = at(key);
  if (!v.is_array()) fail(key, "expected an array, got " + type_name(v));
  std::vector<long> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) fail(key + "[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(v[i].get<long>());
  }
  return out;
}

std::vector<ConfigNode> ConfigNode::objects(const std::string& key) const {
  const auto& v = at(key);
  if (!v.is_array()) fail(key, "expected an array, got " + type_name(v));
  std::vector<ConfigNode> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.emplace_back(v[i], path_ + "." + key + "[" + std::to_string(i) + "]");
  }
  return out;
}

nlohmann::json parse_config_text(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("$", std::string("invalid JSON: ") + e.what());
  }
  check_schema(root);
  return root;
}

nlohmann::json load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("$", "cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

StrainModel parse_strain(const ConfigNode& node) {
  const std::string kind = node.string("kind");
  if (kind == "rational") {
    node.allow_only({"kind", "c1", "c2"});
    const double c1 = node.number("c1");
    const double c2 = node.number("c2");
    return guarded(node.path() + ".c2", [&] { return StrainModel::rational(c1, c2); });
  }
  if (kind == "constant") {
    node.allow_only({"kind", "gamma0"});
    const double g = node.number("gamma0");
    return guarded(node.path() + ".gamma0", [&] { return StrainModel::constant(g); });
  }
  node.fail("kind", "expected \"rational\" or \"constant\", got \"" + kind + "\"");
}

namespace {

EigenMode parse_mode(const ConfigNode& node, std::optional<double> alpha) {
  const long n = node.integer("n");
  double a = 0.0;
  if (node.has("alpha")) {
    a = node.number("alpha");
    if (alpha && *alpha != a) node.fail("alpha", "modes of a superposition must share alpha");
  } else if (alpha) {
    a = *alpha;
  } else {
    node.fail("alpha", "missing required key");
  }
  if (n < 0 || n > 400) node.fail("n", "mode index must lie in [0, 400]");
  return guarded(node.path(), [&] { return EigenMode(static_cast<int>(n), a); });
}

}  // namespace

ExactSolution parse_solution(const ConfigNode& node) {
  const std::string type = node.string("type");
  if (type == "steady") {
    node.allow_only({"type", "alpha", "c_amp"});
    const double alpha = node.number("alpha");
    const double c = node.number_or("c_amp", 1.0);
    return guarded(node.path() + ".alpha", [&] { return ExactSolution(SteadyProfile(alpha, c)); });
  }
  if (type == "eigenmode") {
    node.allow_only({"type", "n", "alpha", "coeff"});
    const EigenMode m = parse_mode(node, std::nullopt);
    return SeparableSolution::single(m, node.number_or("coeff", 1.0));
  }
  if (type == "superposition") {
    node.allow_only({"type", "alpha", "modes"});
    std::optional<double> alpha;
    if (node.has("alpha")) alpha = node.number("alpha");
    std::vector<ModeTerm> terms;
    for (const auto& m : node.objects("modes")) {
      m.allow_only({"type", "n", "alpha", "coeff"});
      if (m.has("type") && m.string("type") != "eigenmode") m.fail("type", "expected \"eigenmode\"");
      const EigenMode mode = parse_mode(m, alpha);
      if (!alpha) alpha = mode.alpha();
      terms.push_back({m.number("coeff"), mode});
    }
    if (terms.empty()) node.fail("modes", "at least one mode is required");
    return guarded(node.path(), [&] { return ExactSolution(SeparableSolution(*alpha, terms)); });
  }
  node.fail("type", "expected \"steady\", \"eigenmode\" or \"superposition\", got \"" + type + "\"");
}

Grid1D parse_grid(const ConfigNode& node) {
  node.allow_only({"half_width", "num_points"});
  const double L = node.number("half_width");
  const long n = node.integer("num_points");
  if (n < 3) node.fail("num_points", "must be an odd integer >= 3");
  return guarded(node.path(), [&] { return Grid1D(L, static_cast<std::size_t>(n)); });
}

EvalConfig parse_eval_config(const nlohmann::json& root) {
  check_schema(root);
  const ConfigNode node(root, "$");
  node.allow_only({"schema_version", "solution", "grid", "coordinates", "tau", "t", "frame", "include_w",
                   "output"});
  EvalConfig cfg{parse_solution(node.object("solution")), parse_grid(node.object("grid")), false, std::nullopt};
  const std::string coords = node.string_or("coordinates", "similarity");
  if (coords == "similarity") {
    if (node.has("t")) node.fail("t", "only valid with \"coordinates\": \"physical\" (use tau)");
    if (node.has("frame")) node.fail("frame", "only valid with \"coordinates\": \"physical\"");
    cfg.time = node.number_or("tau", 0.0);
    if (cfg.time < 0.0) node.fail("tau", "must be nonnegative");
  } else if (coords == "physical") {
    if (node.has("tau")) node.fail("tau", "not valid with \"coordinates\": \"physical\" (use t)");
    cfg.physical = true;
    const ConfigNode fnode = node.object("frame");
    fnode.allow_only({"strain", "nu"});
    cfg.frame = parse_frame(fnode);
    check_alpha_matches(node, "solution", cfg.solution, *cfg.frame);
    cfg.time = node.number_or("t", 0.0);
    if (cfg.time < 0.0 || !(cfg.time < horizon(cfg.frame->strain()))) {
      node.fail("t", "must lie in [0, t*) where t* = " + format_double(horizon(cfg.frame->strain())));
    }
  } else {
    node.fail("coordinates", "expected \"similarity\" or \"physical\"");
  }
  cfg.include_w = node.boolean_or("include_w", false);
  cfg.output = node.string_or("output", cfg.output);
  return cfg;
}

EvolveConfig parse_evolve_config(const nlohmann::json& root, const std::filesystem::path& base_dir) {
  check_schema(root);
  const ConfigNode node(root, "$");
  node.allow_only({"schema_version", "equation", "grid", "initial", "end_time", "dt", "scheme", "boundary",
                   "snapshot_times", "norm_samples", "output_prefix"});

  const ConfigNode eq = node.object("equation");
  const std::string eq_type = eq.string("type");
  Equation equation = SimilarityEquation{1.0};
  std::optional<SimilarityFrame> frame;
  if (eq_type == "similarity") {
    eq.allow_only({"type", "alpha"});
    const double alpha = eq.number("alpha");
    if (!(alpha > 0.0)) eq.fail("alpha", "similarity equation requires alpha > 0");
    equation = SimilarityEquation{alpha};
  } else if (eq_type == "physical") {
    eq.allow_only({"type", "strain", "nu"});
    frame = parse_frame(eq);
    equation = PhysicalEquation{*frame};
  } else {
    eq.fail("type", "expected \"similarity\" or \"physical\"");
  }

  std::optional<Grid1D> grid;
  if (node.has("grid")) grid = parse_grid(node.object("grid"));

  const ConfigNode init = node.object("initial");
  const std::string init_type = init.string("type");
  std::optional<Field1D> initial;
  if (init_type == "solution") {
    init.allow_only({"type", "solution"});
    if (!grid) node.fail("grid", "missing required key (needed for a solution initial condition)");
    const ExactSolution s = parse_solution(init.object("solution"));
    if (frame) {
      check_alpha_matches(init, "solution", s, *frame);
      initial = guarded(init.path(), [&] { return physical_field(s, *frame, *grid); });
    } else {
      if (std::abs(solution_alpha(s) - std::get<SimilarityEquation>(equation).alpha) > 1e-12) {
        init.fail("solution", "solution alpha does not match the equation alpha");
      }
      initial = guarded(init.path(), [&] {
        return Field1D::sample(*grid, [&](double xi) { return similarity_omega(s, xi, 0.0); });
      });
    }
  } else if (init_type == "csv") {
    init.allow_only({"type", "path"});
    std::filesystem::path p = init.string("path");
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    initial = guarded(init.path() + ".path", [&] { return read_field_csv(p); });
    if (grid && !(*grid == initial->grid())) {
      node.fail("grid", "does not match the grid of the CSV initial condition");
    }
  } else if (init_type == "zero") {
    init.allow_only({"type"});
    if (!grid) node.fail("grid", "missing required key (needed for a zero initial condition)");
    initial = Field1D(*grid);
  } else {
    init.fail("type", "expected \"solution\", \"csv\" or \"zero\"");
  }

  EvolveSpec spec;
  spec.equation = equation;
  spec.end_time = node.number("end_time");
  if (node.has("dt")) {
    const ConfigNode dt = node.object("dt");
    const std::string dt_type = dt.string("type");
    if (dt_type == "cfl") {
      dt.allow_only({"type", "factor"});
      spec.dt = CflDt{dt.number_or("factor", 0.4)};
    } else if (dt_type == "fixed") {
      dt.allow_only({"type", "dt"});
      spec.dt = FixedDt{dt.number("dt")};
    } else {
      dt.fail("type", "expected \"cfl\" or \"fixed\"");
    }
  }
  const std::string scheme = node.string_or("scheme", "rk4");
  if (scheme == "rk4") {
    spec.scheme = TimeScheme::ExplicitRK4;
  } else if (scheme == "trapezoidal") {
    spec.scheme = TimeScheme::ImplicitTrapezoidal;
  } else {
    node.fail("scheme", "expected \"rk4\" or \"trapezoidal\"");
  }
  const std::string boundary = node.string_or("boundary", "dirichlet_zero");
  if (boundary == "dirichlet_zero") {
    spec.boundary = Boundary::DirichletZero;
  } else if (boundary == "dirichlet_held") {
    spec.boundary = Boundary::DirichletHeld;
  } else {
    node.fail("boundary", "expected \"dirichlet_zero\" or \"dirichlet_held\"");
  }
  if (node.has("snapshot_times")) spec.snapshot_times = node.numbers("snapshot_times");
  const long samples = node.integer_or("norm_samples", 101);
  if (samples < 2) node.fail("norm_samples", "must be >= 2");
  spec.norm_samples = static_cast<std::size_t>(samples);

  try {
    spec.validate();
  } catch (const DomainError& e) {
    node.fail("end_time", e.what());
  } catch (const std::exception& e) {
    throw ConfigError("$", e.what());
  }
  if (spec.boundary == Boundary::DirichletZero) {
    const auto& v = initial->values();
    const double scale = initial->linf_norm();
    if (std::abs(v.front()) > 1e-10 * scale || std::abs(v.back()) > 1e-10 * scale) {
      node.fail("boundary",
                "initial data is not negligible at the grid ends; widen the grid or use \"dirichlet_held\"");
    }
  }
  return {spec, *initial, node.string_or("output_prefix", "evolve")};
}

SpectrumConfig parse_spectrum_config(const nlohmann::json& root) {
  check_schema(root);
  const ConfigNode node(root, "$");
  node.allow_only({"schema_version", "alpha", "grid", "k", "threshold"});
  SpectrumConfig cfg{node.number("alpha")};
  if (!(cfg.alpha > 0.0)) node.fail("alpha", "must be positive (no decaying eigenmodes otherwise)");
  if (node.has("grid")) cfg.grid = parse_grid(node.object("grid"));
  const long k = node.integer_or("k", cfg.k);
  if (k < 0 || k > 12) node.fail("k", "must lie in [0, 12]");
  cfg.k = static_cast<int>(k);
  cfg.threshold = node.number_or("threshold", cfg.threshold);
  if (!(cfg.threshold > 0.0)) node.fail("threshold", "must be positive");
  if (cfg.grid.spacing() > SpectrumOptions{}.max_spacing) {
    node.fail("grid", "spacing " + format_double(cfg.grid.spacing()) + " exceeds " +
                          format_double(SpectrumOptions{}.max_spacing));
  }
  return cfg;
}

CrossCheckConfig parse_crosscheck_config(const nlohmann::json& root) {
  check_schema(root);
  const ConfigNode node(root, "$");
  node.allow_only({"schema_version", "strain", "nu", "modes", "t_end", "grid_points", "xi_extent",
                   "threshold", "cfl_factor"});
  CrossCheckConfig cfg{parse_frame(node), {0, 1}, 1.0, {2001}, CrossCheckOptions{}};
  if (node.has("modes")) {
    cfg.modes.clear();
    for (long n : node.integers("modes")) {
      if (n < 0 || n > 20) node.fail("modes", "mode indices must lie in [0, 20]");
      cfg.modes.push_back(static_cast<int>(n));
    }
    if (cfg.modes.empty()) node.fail("modes", "at least one mode is required");
  }
  cfg.t_end = node.number_or("t_end", cfg.t_end);
  const double t_star = horizon(cfg.frame.strain());
  if (!(cfg.t_end > 0.0) || !(cfg.t_end < t_star)) {
    node.fail("t_end", "must lie in (0, t*) where t* = " + format_double(t_star));
  }
  if (node.has("grid_points")) {
    cfg.grid_points.clear();
    for (long n : node.integers("grid_points")) {
      if (n < 3 || n % 2 == 0) node.fail("grid_points", "grid sizes must be odd and >= 3");
      cfg.grid_points.push_back(static_cast<std::size_t>(n));
    }
    if (cfg.grid_points.empty()) node.fail("grid_points", "at least one grid is required");
  }
  cfg.options.xi_extent = node.number_or("xi_extent", cfg.options.xi_extent);
  if (!(cfg.options.xi_extent > 0.0)) node.fail("xi_extent", "must be positive");
  cfg.options.threshold = node.number_or("threshold", cfg.options.threshold);
  if (!(cfg.options.threshold > 0.0)) node.fail("threshold", "must be positive");
  cfg.options.cfl_factor = node.number_or("cfl_factor", cfg.options.cfl_factor);
  if (!(cfg.options.cfl_factor > 0.0 && cfg.options.cfl_factor <= 1.0)) {
    node.fail("cfl_factor", "must lie in (0, 1]");
  }
  return cfg;
}

ConvergenceConfig parse_convergence_config(const nlohmann::json& root) {
  check_schema(root);
  const ConfigNode node(root, "$");
  node.allow_only({"schema_version", "alpha", "n", "tau_end", "half_width", "num_points", "time_num_points", "dts"});
  ConvergenceConfig cfg;
  cfg.alpha = node.number_or("alpha", cfg.alpha);
  if (!(cfg.alpha > 0.0)) node.fail("alpha", "must be positive");
  const long n = node.integer_or("n", cfg.n);
  if (n < 0 || n > 20) node.fail("n", "must lie in [0, 20]");
  cfg.n = static_cast<int>(n);
  cfg.tau_end = node.number_or("tau_end", cfg.tau_end);
  if (!(cfg.tau_end > 0.0)) node.fail("tau_end", "must be positive");
  cfg.half_width = node.number_or("half_width", cfg.half_width);
  if (!(cfg.half_width > 0.0)) node.fail("half_width", "must be positive");
  if (node.has("num_points")) {
    cfg.num_points.clear();
    for (long p : node.integers("num_points")) {
      if (p < 3 || p % 2 == 0) node.fail("num_points", "grid sizes must be odd and >= 3");
      cfg.num_points.push_back(static_cast<std::size_t>(p));
    }
    if (cfg.num_points.size() < 2) node.fail("num_points", "at least two grids are required");
  }
  const long tn = node.integer_or("time_num_points", static_cast<long>(cfg.time_num_points));
  if (tn < 3 || tn % 2 == 0) node.fail("time_num_points", "must be odd and >= 3");
  cfg.time_num_points = static_cast<std::size_t>(tn);
  if (node.has("dts")) {
    cfg.dts = node.numbers("dts");
    for (double d : cfg.dts) {
      if (!(d > 0.0) || !(d <= cfg.tau_end)) node.fail("dts", "steps must lie in (0, tau_end]");
    }
  }
  return cfg;
}

}  // namespace burgers
