#include "inerton/core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace inerton {

std::vector<std::string> config_violations(const SimulationConfig& config) {
  std::vector<std::string> out;
  auto require = [&](bool ok, const char* what) {
    if (!ok) out.emplace_back(what);
  };
  require(std::isfinite(config.M) && config.M > 0.0, "M > 0");
  require(std::isfinite(config.v0) && config.v0 > 0.0, "v0 > 0");
  require(std::isfinite(config.c) && config.v0 < config.c, "v0 < c");
  require(std::isfinite(config.T) && config.T > 0.0, "T > 0");
  require(config.N >= 1, "N >= 1");
  require(std::isfinite(config.R0) && config.R0 > 0.0, "R0 > 0");
  require(std::isfinite(config.h) && config.h > 0.0, "h > 0");
  require(config.steps_per_period >= 2, "steps_per_period >= 2");
  require(config.n_oscillations >= 1, "n_oscillations >= 1");
  return out;
}

void validate(const SimulationConfig& config) {
  const auto bad = config_violations(config);
  if (!bad.empty()) {
    throw std::domain_error("invalid config: violates " + bad.front());
  }
}

EmissionEvent emission_schedule(const SimulationConfig& config, int l) {
  if (l < 0 || l > config.N - 1) {
    throw std::domain_error("emission slot l=" + std::to_string(l) +
                            " outside [0, N-1] = [0, " +
                            std::to_string(config.N - 1) + "]");
  }
  const double N = config.N;
  EmissionEvent ev;
  ev.l = l;
  ev.N = config.N;
  ev.c = config.c;
  ev.delta_t_l = config.T * l / (2.0 * N);
  ev.T_l = config.T * (1.0 - l / N);
  ev.v0l = config.v0 * (1.0 - std::sin(std::numbers::pi * l / (2.0 * N)));
  ev.m_l = inerton_mass_unchecked(config.M, ev.v0l, config.c);
  ev.lambda_l = ev.v0l * ev.T_l;
  ev.Lambda_l = config.c * ev.T_l;
  return ev;
}

std::vector<EmissionEvent> emission_table_serial(const SimulationConfig& config) {
  std::vector<EmissionEvent> table(static_cast<std::size_t>(config.N));
  for (int l = 0; l < config.N; ++l) {
    table[static_cast<std::size_t>(l)] = emission_schedule(config, l);
  }
  return table;
}

std::vector<EmissionEvent> emission_table(const SimulationConfig& config) {
  std::vector<EmissionEvent> table(static_cast<std::size_t>(config.N));
#pragma omp parallel for schedule(static)
  for (int l = 0; l < config.N; ++l) {
    table[static_cast<std::size_t>(l)] = emission_schedule(config, l);
  }
  return table;
}

bool is_finite(const SystemState& s) {
  return std::isfinite(s.t_l) && std::isfinite(s.X) && std::isfinite(s.Xdot) &&
         std::isfinite(s.x_perp) && std::isfinite(s.xdot_perp) &&
         std::isfinite(s.x_par);
}

std::string to_string(Provenance p) {
  return p == Provenance::analytic ? "analytic" : "integrated";
}

Provenance provenance_from_string(const std::string& name) {
  if (name == "analytic") return Provenance::analytic;
  if (name == "integrated") return Provenance::integrated;
  throw std::invalid_argument("unknown provenance '" + name + "'");
}

Vec3 rotate_so3_x(double angle, const Vec3& v) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {v[0], c * v[1] + s * v[2], -s * v[1] + c * v[2]};
}

}  // namespace inerton
