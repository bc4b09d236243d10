#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pacs/systems.hpp"

namespace pacs::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GridScale { abs_z, abs_z_sq };

/// One run of the command-line tool: command, system parameters, the
/// amplitude grid and output destination. Built from per-command
/// defaults, then a config file, then --param overrides, in that order.
struct RunConfig {
  std::string command;
  Family family = Family::DType;
  double gamma = 1.0;
  double c = 1.0;
  double kappa = 1.0;
  double rho = -2.0;
  double nu = 1.5;
  double alpha = 0.0;
  std::vector<int> m_list{0};
  double z_min = 0.05;
  double z_max = 10.0;
  int z_count = 200;
  GridScale z_scale = GridScale::abs_z;
  double z_abs = 2.0; // fixed amplitude for distribution tables
  int n_max = 40;     // largest eigenstate index for distribution tables
  std::string quantity = "q"; // q | g2 | mean_n | mean_n2 | norm | weight
  std::string output_path;
  bool emit_plot_script = false;
  bool user_system = false; // any system parameter explicitly overridden
};

/// Defaults for a command, including the built-in reference parameter
/// sets of the fig1..fig12 curves.
RunConfig default_config(const std::string& command);

/// Apply one key=value override; unknown keys or malformed values throw
/// ConfigError.
void apply_override(RunConfig& cfg, const std::string& key,
                    const std::string& value);

/// Load a flat key=value file ('#' starts a comment). Errors carry the
/// offending line number.
void load_config_file(RunConfig& cfg, const std::string& path);

/// Check cross-field invariants (grid inside the convergence domain,
/// m_list entries >= 0, constructible system); throws ConfigError.
void validate_config(const RunConfig& cfg);

SipSystem make_system(const RunConfig& cfg);

/// Execute the command; returns the process exit code (0 ok,
/// 1 verification failure, 2 configuration error, 3 numerical failure).
/// Human-readable progress/diagnostics go to `diag`.
int run_command(const RunConfig& cfg, std::ostream& diag);

} // namespace pacs::cli
