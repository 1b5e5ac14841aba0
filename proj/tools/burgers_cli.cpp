// burgers: command-line front end of the vortex workbench.

#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "burgers/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Modified 2D Burgers vortex workbench"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config;
  std::string out_dir = ".";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::optional<double> tolerance;
  std::uint64_t seed = 0;

  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for accept")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Reserved; every method is deterministic");
  app.add_option("--tolerance", tolerance, "Override the pass threshold of spectrum/crosscheck");

  const auto with_config = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config, "Run-config JSON")->required()->check(CLI::ExistingFile);
    return sub;
  };
  with_config("eval", "Evaluate a closed-form solution on a grid (CSV)");
  with_config("evolve", "Integrate the PDE (snapshot and norms CSVs)");
  with_config("spectrum", "Discrete eigenvalues against the closed form (JSON)");
  with_config("crosscheck", "Decide the alpha mapping with the physical-equation oracle (JSON)");
  with_config("convergence", "Spatial and temporal refinement study (CSV)");
  app.add_subcommand("specfun-check", "Parabolic cylinder function self-test");
  app.add_subcommand("accept", "Run the acceptance suite");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : burgers::kExitValidation;
  }

  burgers::CommandContext ctx;
  ctx.out_dir = out_dir;
  ctx.threads = threads;
  ctx.tolerance = tolerance;
  std::optional<std::filesystem::path> config_path;
  if (!config.empty()) config_path = config;
  try {
    std::filesystem::create_directories(ctx.out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: cannot create output directory: " << e.what() << "\n";
    return burgers::kExitValidation;
  }
  return burgers::run_command(app.get_subcommands().front()->get_name(), config_path, ctx);
}
