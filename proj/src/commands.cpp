#include "burgers/commands.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "burgers/acceptance.hpp"
#include "burgers/config.hpp"
#include "burgers/convergence.hpp"
#include "burgers/discrepancy.hpp"
#include "burgers/io.hpp"
#include "burgers/verification.hpp"

namespace burgers {
namespace {

std::ostream& out(const CommandContext& ctx) { return ctx.out ? *ctx.out : std::cout; }
std::ostream& err(const CommandContext& ctx) { return ctx.err ? *ctx.err : std::cerr; }

std::string describe(const ExactSolution& s) {
  std::ostringstream ss;
  ss << std::setprecision(17);
  if (const auto* p = std::get_if<SteadyProfile>(&s)) {
    ss << "steady profile, alpha = " << p->alpha() << ", C1 = " << p->c_amp();
  } else {
    const auto& sep = std::get<SeparableSolution>(s);
    ss << "separable solution, alpha = " << sep.alpha() << ", modes:";
    for (const auto& t : sep.terms()) ss << " " << t.coeff << "*h_" << t.mode.n();
  }
  return ss.str();
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  write_atomic(path, j.dump(2) + "\n");
}

std::string snapshot_name(const std::string& prefix, std::size_t k) {
  std::ostringstream ss;
  ss << prefix << "_snapshot_" << std::setw(3) << std::setfill('0') << k << ".csv";
  return ss.str();
}

}  // namespace

int cmd_eval(const nlohmann::json& config, const CommandContext& ctx) {
  const EvalConfig cfg = parse_eval_config(config);
  const std::vector<double> coords = cfg.grid.coordinates();
  std::vector<double> omega(coords.size()), w;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    omega[i] = cfg.physical ? physical_omega(cfg.solution, *cfg.frame, coords[i], cfg.time)
                            : similarity_omega(cfg.solution, coords[i], cfg.time);
  }
  if (cfg.include_w) {
    w.resize(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      w[i] = cfg.physical ? w_profile(cfg.solution, *cfg.frame, coords[i], cfg.time)
                          : similarity_w(cfg.solution, coords[i], cfg.time);
    }
  }
  CsvTable table;
  table.comments.push_back(describe(cfg.solution));
  if (cfg.physical) {
    table.comments.push_back("physical coordinates, t = " + format_double(cfg.time) +
                             ", nu = " + format_double(cfg.frame->nu()));
    table.columns = {"x", "omega"};
  } else {
    table.comments.push_back("similarity coordinates, tau = " + format_double(cfg.time));
    table.columns = {"xi", "omega"};
  }
  if (cfg.include_w) {
    table.comments.push_back("w = integral of omega from 0 to the coordinate");
    table.columns.push_back("w");
  }
  table.data = {coords, omega};
  if (cfg.include_w) table.data.push_back(w);
  const auto path = ctx.out_dir / cfg.output;
  write_atomic(path, to_csv(table));
  out(ctx) << "wrote " << coords.size() << " rows to " << path.string() << "\n";
  return kExitOk;
}

int cmd_evolve(const nlohmann::json& config, const CommandContext& ctx) {
  const EvolveConfig cfg = parse_evolve_config(config, ctx.config_dir);
  const EvolveResult r = evolve(cfg.initial, cfg.spec);
  const bool physical = std::holds_alternative<PhysicalEquation>(cfg.spec.equation);
  const std::string coord = physical ? "x" : "xi";
  const std::string time_name = physical ? "t" : "tau";
  for (std::size_t k = 0; k < r.snapshots.size(); ++k) {
    const auto& s = r.snapshots[k];
    write_atomic(ctx.out_dir / snapshot_name(cfg.output_prefix, k),
                 field_csv(s.field, coord, {"snapshot at " + time_name + " = " + format_double(s.time)}));
  }
  write_atomic(ctx.out_dir / (cfg.output_prefix + "_final.csv"),
               field_csv(r.final_field, coord,
                         {"final field at " + time_name + " = " + format_double(cfg.spec.end_time)}));
  write_atomic(ctx.out_dir / (cfg.output_prefix + "_norms.csv"),
               norms_csv(r.norms, {"norms over " + time_name + "; l2 = sqrt(h sum omega^2)"}));
  out(ctx) << "evolved to " << time_name << " = " << cfg.spec.end_time << " in " << r.steps
           << " steps (largest dt " << r.largest_dt << "); final L2 " << r.final_field.l2_norm() << "\n";
  return kExitOk;
}

int cmd_spectrum(const nlohmann::json& config, const CommandContext& ctx) {
  SpectrumConfig cfg = parse_spectrum_config(config);
  if (ctx.tolerance) cfg.threshold = *ctx.tolerance;
  const SpectrumReport report = discrete_spectrum(cfg.alpha, cfg.grid, cfg.k);
  nlohmann::json j = to_json(report);
  j["threshold"] = cfg.threshold;
  bool ok = true;
  for (const auto& e : report.entries) {
    const bool pass = e.abs_error < cfg.threshold;
    ok = ok && pass;
    out(ctx) << "n=" << e.index << "  computed " << std::setprecision(12) << e.computed << "  closed form "
             << e.closed_form << "  error " << std::setprecision(3) << e.abs_error << (pass ? "" : "  ABOVE THRESHOLD")
             << (e.closed_form < 0.0 ? "  growing mode" : "") << "\n";
  }
  j["passed"] = ok;
  write_json(ctx.out_dir / "spectrum.json", j);
  return ok ? kExitOk : kExitNumeric;
}

int cmd_crosscheck(const nlohmann::json& config, const CommandContext& ctx) {
  CrossCheckConfig cfg = parse_crosscheck_config(config);
  if (ctx.tolerance) cfg.options.threshold = *ctx.tolerance;
  if (const double a = alpha_of(cfg.frame.strain()); !eigenmodes_bounded(a)) {
    err(ctx) << "warning: alpha = 1 - c1 = " << a << " <= 0, the eigenmodes are unbounded\n";
  }
  nlohmann::json runs = nlohmann::json::array();
  std::optional<CrossCheckResult> first;
  std::optional<double> winner;
  bool ok = true;
  bool degenerate = false;
  for (std::size_t N : cfg.grid_points) {
    for (int n : cfg.modes) {
      CrossCheckOptions opts = cfg.options;
      opts.num_points = N;
      const CrossCheckResult r = cross_check_transform(cfg.frame, n, cfg.t_end, opts);
      runs.push_back(to_json(r));
      out(ctx) << "N=" << N << " n=" << n << ":";
      for (const auto& c : r.candidates) {
        out(ctx) << "  alpha = " << c.label << " = " << c.alpha << " error " << std::setprecision(3) << c.max_error
                 << (c.passes ? " (pass)" : " (fail)");
      }
      out(ctx) << "\n";
      degenerate = degenerate || r.degenerate;
      if (!r.winning_alpha || (winner && *winner != *r.winning_alpha)) ok = false;
      if (r.winning_alpha && !winner) winner = r.winning_alpha;
      if (!first) first = r;
    }
  }
  nlohmann::json summary = {{"runs", runs}, {"consistent", ok}};
  summary["winning_alpha"] = ok && winner ? nlohmann::json(*winner) : nlohmann::json();
  if (degenerate) summary["note"] = "degenerate at c1 = 0: both mappings give alpha = 1";
  write_json(ctx.out_dir / "crosscheck.json", summary);
  write_json(ctx.out_dir / "discrepancy.json", to_json(build_discrepancy_report(*first)));
  if (degenerate) out(ctx) << "note: degenerate at c1 = 0 (both candidates coincide)\n";
  if (ok) {
    out(ctx) << "winning alpha " << std::setprecision(17) << *winner << "\n";
  } else {
    err(ctx) << "no consistent winning alpha mapping\n";
  }
  return ok ? kExitOk : kExitNumeric;
}

int cmd_convergence(const nlohmann::json& config, const CommandContext& ctx) {
  const ConvergenceConfig cfg = parse_convergence_config(config);
  const auto space = spatial_convergence(cfg.alpha, cfg.n, cfg.tau_end, cfg.half_width, cfg.num_points);
  const auto time =
      temporal_convergence(cfg.alpha, cfg.n, cfg.tau_end, Grid1D(cfg.half_width, cfg.time_num_points), cfg.dts);
  const std::string what = "h_" + std::to_string(cfg.n) + ", alpha = " + format_double(cfg.alpha) +
                           ", tau_end = " + format_double(cfg.tau_end);
  CsvTable st{{"spatial refinement, rk4 cfl 0.4, " + what, "order is NaN on the first row"},
              {"num_points", "spacing", "error", "order"},
              {{}, {}, {}, {}}};
  for (const auto& p : space) {
    st.data[0].push_back(static_cast<double>(p.num_points));
    st.data[1].push_back(p.spacing);
    st.data[2].push_back(p.error);
    st.data[3].push_back(p.order);
    out(ctx) << "N=" << p.num_points << " error " << std::setprecision(3) << p.error << " order " << p.order << "\n";
  }
  CsvTable tt{{"rk4 step refinement against a dt/16 reference, " + what}, {"dt", "error", "order"}, {{}, {}, {}}};
  for (const auto& p : time) {
    tt.data[0].push_back(p.dt);
    tt.data[1].push_back(p.error);
    tt.data[2].push_back(p.order);
    out(ctx) << "dt=" << p.dt << " error " << std::setprecision(3) << p.error << " order " << p.order << "\n";
  }
  write_atomic(ctx.out_dir / "convergence_space.csv", to_csv(st));
  write_atomic(ctx.out_dir / "convergence_time.csv", to_csv(tt));
  return kExitOk;
}

int cmd_specfun_check(const CommandContext& ctx) {
  const CriterionResult r = run_criterion(6);
  out(ctx) << format_result_line(r) << "\n";
  write_json(ctx.out_dir / "specfun_check.json", to_json(std::vector<CriterionResult>{r}));
  return r.passed ? kExitOk : kExitNumeric;
}

int cmd_accept(const CommandContext& ctx) {
  const auto results = run_acceptance(ctx.threads);
  bool all = true;
  for (const auto& r : results) {
    out(ctx) << format_result_line(r) << "\n";
    all = all && r.passed;
  }
  write_json(ctx.out_dir / "acceptance.json", to_json(results));
  out(ctx) << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  return all ? kExitOk : kExitNumeric;
}

int run_command(const std::string& name, const std::optional<std::filesystem::path>& config,
                const CommandContext& ctx) {
  try {
    if (name == "specfun-check") return cmd_specfun_check(ctx);
    if (name == "accept") return cmd_accept(ctx);
    if (!config) throw ConfigError("$", "--config is required for " + name);
    CommandContext local = ctx;
    if (local.config_dir.empty()) local.config_dir = config->parent_path();
    const nlohmann::json j = load_config_file(*config);
    if (name == "eval") return cmd_eval(j, local);
    if (name == "evolve") return cmd_evolve(j, local);
    if (name == "spectrum") return cmd_spectrum(j, local);
    if (name == "crosscheck") return cmd_crosscheck(j, local);
    if (name == "convergence") return cmd_convergence(j, local);
    throw ConfigError("$", "unknown command " + name);
  } catch (const ConfigError& e) {
    err(ctx) << "config error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err(ctx) << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace burgers
