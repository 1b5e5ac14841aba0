#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace burgers {

enum ExitCode : int { kExitOk = 0, kExitNumeric = 1, kExitValidation = 2 };

struct CommandContext {
  std::filesystem::path out_dir = ".";
  std::filesystem::path config_dir;  ///< base for relative paths inside the config
  unsigned threads = 1;
  std::optional<double> tolerance;  ///< overrides the command's pass threshold
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

int cmd_eval(const nlohmann::json& config, const CommandContext& ctx);
int cmd_evolve(const nlohmann::json& config, const CommandContext& ctx);
int cmd_spectrum(const nlohmann::json& config, const CommandContext& ctx);
int cmd_crosscheck(const nlohmann::json& config, const CommandContext& ctx);
int cmd_convergence(const nlohmann::json& config, const CommandContext& ctx);
int cmd_specfun_check(const CommandContext& ctx);
int cmd_accept(const CommandContext& ctx);

/// Loads the config (when the command takes one), runs the command and maps
/// exceptions to exit codes: ConfigError -> 2, anything else -> 1.
int run_command(const std::string& name, const std::optional<std::filesystem::path>& config,
                const CommandContext& ctx);

}  // namespace burgers
