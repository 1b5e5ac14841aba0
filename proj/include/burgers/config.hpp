#pragma once
// Strict JSON run configurations. Every block rejects unknown keys, and
// every error names the offending field as a JSON path ("$.strain.c2").

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "burgers/exact_solutions.hpp"
#include "burgers/grid.hpp"
#include "burgers/pde_solver.hpp"
#include "burgers/strain_model.hpp"
#include "burgers/verification.hpp"

namespace burgers {

inline constexpr int kSchemaVersion = 1;

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Read-only view of a JSON object that remembers where it sits in the
/// document.
class ConfigNode {
 public:
  ConfigNode(const nlohmann::json& j, std::string path);

  const std::string& path() const noexcept { return path_; }
  const nlohmann::json& json() const noexcept { return *j_; }
  bool has(const std::string& key) const;

  /// Throws ConfigError for any key outside `allowed`.
  void allow_only(std::initializer_list<const char*> allowed) const;

  ConfigNode object(const std::string& key) const;
  double number(const std::string& key) const;
  double number_or(const std::string& key, double fallback) const;
  long integer(const std::string& key) const;
  long integer_or(const std::string& key, long fallback) const;
  std::string string(const std::string& key) const;
  std::string string_or(const std::string& key, const std::string& fallback) const;
  bool boolean_or(const std::string& key, bool fallback) const;
  std::vector<double> numbers(const std::string& key) const;
  std::vector<long> integers(const std::string& key) const;
  std::vector<ConfigNode> objects(const std::string& key) const;

  [[noreturn]] void fail(const std::string& key, const std::string& what) const;

 private:
  const nlohmann::json& at(const std::string& key) const;
  const nlohmann::json* j_;
  std::string path_;
};

/// Parses text, checks that the root is an object with schema_version 1.
nlohmann::json parse_config_text(const std::string& text);
nlohmann::json load_config_file(const std::filesystem::path& path);

StrainModel parse_strain(const ConfigNode& node);
ExactSolution parse_solution(const ConfigNode& node);
Grid1D parse_grid(const ConfigNode& node);

struct EvalConfig {
  ExactSolution solution;
  Grid1D grid;
  bool physical = false;
  std::optional<SimilarityFrame> frame;  ///< set when physical
  double time = 0.0;                     ///< tau, or t when physical
  bool include_w = false;
  std::string output = "eval.csv";
};

struct EvolveConfig {
  EvolveSpec spec;
  Field1D initial;
  std::string output_prefix = "evolve";
};

struct SpectrumConfig {
  double alpha;
  Grid1D grid{10.0, 2001};
  int k = 4;
  double threshold = 1e-3;
};

struct CrossCheckConfig {
  SimilarityFrame frame;
  std::vector<int> modes{0, 1};
  double t_end = 1.0;
  std::vector<std::size_t> grid_points{2001};
  CrossCheckOptions options;
};

struct ConvergenceConfig {
  double alpha = 1.0;
  int n = 1;
  double tau_end = 1.0;
  double half_width = 10.0;
  std::vector<std::size_t> num_points{251, 501, 1001, 2001};
  std::size_t time_num_points = 81;
  std::vector<double> dts{0.02, 0.01, 0.005};
};

/// `base_dir` resolves relative CSV paths in evolve configs.
EvalConfig parse_eval_config(const nlohmann::json& root);
EvolveConfig parse_evolve_config(const nlohmann::json& root, const std::filesystem::path& base_dir = {});
SpectrumConfig parse_spectrum_config(const nlohmann::json& root);
CrossCheckConfig parse_crosscheck_config(const nlohmann::json& root);
ConvergenceConfig parse_convergence_config(const nlohmann::json& root);

}  // namespace burgers
