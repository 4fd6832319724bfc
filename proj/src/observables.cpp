#include "inerton/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace inerton::observables {

double inerton_mass(double M, double v0l, double c) {
  if (!(M > 0.0)) throw std::domain_error("inerton_mass: M must be > 0");
  if (!(v0l > 0.0)) throw std::domain_error("inerton_mass: v0l must be > 0");
  if (!(v0l <= c)) throw std::domain_error("inerton_mass: v0l must not exceed c");
  return inerton_mass_unchecked(M, v0l, c);
}

std::pair<double, double> coupling_coefficients(double M, double m_l) {
  if (!(M > 0.0) || !(m_l > 0.0)) {
    throw std::domain_error("coupling_coefficients: masses must be > 0");
  }
  return {std::sqrt(m_l / M), std::sqrt(M / m_l)};
}

double de_broglie_wavelength(const SimulationConfig& config) {
  return config.h / (config.M * config.v0);
}

double mechanical_wavelength(const SimulationConfig& config) {
  return config.v0 * config.T;
}

double cloud_amplitude(const SimulationConfig& config) {
  return de_broglie_wavelength(config) * config.c / config.v0;
}

double cloud_population(const SimulationConfig& config) {
  return de_broglie_wavelength(config) / config.R0;
}

QuantumRelations quantum_relations(const SimulationConfig& config) {
  QuantumRelations q;
  q.E = config.M * config.v0 * config.v0 / 2.0;
  q.nu = 1.0 / (2.0 * config.T);
  q.p0 = config.M * config.v0;
  return q;
}

double action_increment(const SimulationConfig& config) {
  return quantum_relations(config).E * (2.0 * config.T);
}

SimulationConfig calibrate_action(const SimulationConfig& config) {
  SimulationConfig out = config;
  out.T = config.h / (config.M * config.v0 * config.v0);
  return out;
}

ObservablesReport make_report(const SimulationConfig& config) {
  validate(config);
  const QuantumRelations q = quantum_relations(config);
  ObservablesReport r;
  r.lambda = de_broglie_wavelength(config);
  r.lambda_mech = mechanical_wavelength(config);
  r.Lambda = cloud_amplitude(config);
  r.ratio_c_over_v0 = config.c / config.v0;
  r.N_estimate = cloud_population(config);
  r.m0 = inerton_mass(config.M, config.v0, config.c);
  r.E = q.E;
  r.nu = q.nu;
  r.p0 = q.p0;
  r.J = action_increment(config);
  r.J_over_h = r.J / config.h;
  return r;
}

}  // namespace inerton::observables
