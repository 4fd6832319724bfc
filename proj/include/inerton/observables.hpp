#pragma once

// Scalar observables tying the particle/inerton dynamics to de Broglie
// wave mechanics.
//
// Two wavelengths appear here. lambda_mech = v0 T is the spatial period of
// the particle's oscillation; the de Broglie wavelength is h/(M v0). They
// coincide only when the action over one period equals h, i.e. when
// T = h/(M v0^2) (see calibrate_action).

#include <utility>

#include "inerton/core.hpp"

namespace inerton::observables {

/// M (v0l/c)^2. Throws std::domain_error unless M > 0 and 0 < v0l <= c.
double inerton_mass(double M, double v0l, double c);

/// (sqrt(m_l/M), sqrt(M/m_l)), i.e. (v0l/c, c/v0l). Throws
/// std::domain_error for nonpositive masses.
std::pair<double, double> coupling_coefficients(double M, double m_l);

/// h/(M v0)
double de_broglie_wavelength(const SimulationConfig& config);
/// v0 T
double mechanical_wavelength(const SimulationConfig& config);
/// lambda c/v0 with lambda the de Broglie wavelength.
double cloud_amplitude(const SimulationConfig& config);
/// lambda/R0 with lambda the de Broglie wavelength.
double cloud_population(const SimulationConfig& config);

struct QuantumRelations {
  double E = 0.0;   ///< M v0^2/2 [erg]
  double nu = 0.0;  ///< 1/(2T) [1/s]
  double p0 = 0.0;  ///< M v0 [g cm/s]
};

QuantumRelations quantum_relations(const SimulationConfig& config);

/// J = E 2T, the action gained over one full period 2T.
double action_increment(const SimulationConfig& config);

/// Copy of `config` with T = h/(M v0^2), the half-period for which J = h.
SimulationConfig calibrate_action(const SimulationConfig& config);

struct ObservablesReport {
  double lambda = 0.0;       ///< de Broglie wavelength [cm]
  double lambda_mech = 0.0;  ///< v0 T [cm]
  double Lambda = 0.0;       ///< cloud amplitude [cm]
  double ratio_c_over_v0 = 0.0;
  double N_estimate = 0.0;
  double m0 = 0.0;  ///< inerton mass at l = 0 [g]
  double E = 0.0;
  double nu = 0.0;
  double p0 = 0.0;
  double J = 0.0;
  double J_over_h = 0.0;
};

ObservablesReport make_report(const SimulationConfig& config);

}  // namespace inerton::observables
