#pragma once

// Self-consistency checks run by `inerton verify`.

#include <string>
#include <utility>
#include <vector>

#include "inerton/core.hpp"

namespace inerton::cli {

enum class CheckStatus { pass, fail, info };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  std::string measured;
  std::string tolerance;
  std::vector<std::pair<std::string, std::string>> details;
};

/// Max relative error allowed between the closed-form and RK4 trajectories
/// over one period at `steps` steps:
///   steps >= 1000 : 1e-7
///   steps >= 100  : 1e-6
///   steps >= 10   : 1e-3
///   otherwise     : 0.5
double oracle_tolerance(long long steps);

/// Step counts of the step-halving study.
inline constexpr int kConvergenceLevels[] = {32, 64, 128};

/// Runs every check (OpenMP fan-out) and returns results ordered by name.
std::vector<CheckResult> run_checks(const SimulationConfig& config);

bool all_passed(const std::vector<CheckResult>& results);

/// key=value rendering: check.<name>.status / measured / tolerance / ...
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace inerton::cli
