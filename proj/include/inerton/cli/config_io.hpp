#pragma once

// Config files are flat "key = value" text with '#' comments:
//
//   M_g = 1
//   v0_cm_per_s = 1
//   c_cm_per_s = 10
//   T_s = 1
//   N = 10
//   R0_cm = 1e-28          # optional
//   h_erg_s = 6.626e-27    # optional
//   steps_per_period = 10000
//   n_oscillations = 1

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "inerton/core.hpp"

namespace inerton::cli {

/// Malformed config text. line() is 1-based, 0 when not tied to a line.
class ConfigParseError : public std::runtime_error {
 public:
  ConfigParseError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct LoadedConfig {
  SimulationConfig config;
  std::vector<std::string> defaulted;  ///< keys filled from built-in defaults

  bool was_defaulted(std::string_view key) const;
};

/// Parses config text. Does not validate physical invariants; call
/// inerton::validate on the result.
LoadedConfig parse_config(std::string_view text, const std::string& origin = "config");

/// Reads and parses a config file. Throws std::ios_base::failure when the
/// file cannot be read.
LoadedConfig load_config(const std::string& path);

/// Renders a config in the file format; parse_config(format_config(c)) == c.
std::string format_config(const SimulationConfig& config);

std::vector<std::string> scenario_names();
std::optional<SimulationConfig> scenario(std::string_view name);

}  // namespace inerton::cli
