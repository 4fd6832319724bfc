#pragma once

// Domain types shared by every part of the library.
//
// Units are CGS throughout: lengths in cm, masses in g, times in s,
// energies in erg, actions in erg*s.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace inerton {

/// Built-in CGS constants used by the canned scenarios and as config defaults.
namespace constants {
inline constexpr double planck_h = 6.626e-27;        // erg*s
inline constexpr double electron_mass = 9.109e-28;   // g
inline constexpr double light_speed = 2.998e10;      // cm/s
inline constexpr double superparticle_size = 1e-28; // cm
}  // namespace constants

struct SimulationConfig {
  double M = 1.0;         ///< particle mass [g]
  double v0 = 1.0;        ///< initial particle speed [cm/s]
  double c = 10.0;        ///< inerton launch speed [cm/s]
  double T = 1.0;         ///< base half-period [s]
  int N = 10;             ///< number of emission slots
  double R0 = constants::superparticle_size;  ///< superparticle size [cm]
  double h = constants::planck_h;             ///< action quantum [erg*s]
  int steps_per_period = 10000;
  int n_oscillations = 1;

  friend bool operator==(const SimulationConfig&, const SimulationConfig&) = default;
};

/// Returns the list of violated invariants, empty when the config is valid.
std::vector<std::string> config_violations(const SimulationConfig& config);

/// Throws std::domain_error naming the first violated invariant.
void validate(const SimulationConfig& config);

/// Per-slot parameters of the l-th inerton. All derived scalars are computed
/// once by emission_schedule.
struct EmissionEvent {
  int l = 0;
  int N = 1;
  double c = 0.0;          ///< inerton launch speed [cm/s]
  double delta_t_l = 0.0;  ///< emission delay T*l/(2N) [s]
  double T_l = 0.0;        ///< half-period T*(1 - l/N) [s]
  double v0l = 0.0;        ///< particle speed at emission [cm/s]
  double m_l = 0.0;        ///< inerton mass [g]
  double lambda_l = 0.0;   ///< spatial period v0l*T_l [cm]
  double Lambda_l = 0.0;   ///< cloud amplitude c*T_l [cm]

  friend bool operator==(const EmissionEvent&, const EmissionEvent&) = default;
};

/// m = M*(v/c)^2, the mass of an inerton launched at speed c by a particle
/// moving at v. No validation; see observables::inerton_mass for the checked form.
inline double inerton_mass_unchecked(double M, double v, double c) {
  return M * (v * v) / (c * c);
}

/// Emission schedule for slot l in [0, N-1]. Throws std::domain_error when l
/// is out of range.
EmissionEvent emission_schedule(const SimulationConfig& config, int l);

/// The full ladder l = 0..N-1. Serial reference.
std::vector<EmissionEvent> emission_table_serial(const SimulationConfig& config);

/// The full ladder l = 0..N-1, evaluated with OpenMP. Bit-identical to the
/// serial version.
std::vector<EmissionEvent> emission_table(const SimulationConfig& config);

/// Instantaneous state of the particle and one inerton, in the inerton's
/// proper time t_l.
struct SystemState {
  double t_l = 0.0;
  double X = 0.0;
  double Xdot = 0.0;
  double x_perp = 0.0;
  double xdot_perp = 0.0;
  double x_par = 0.0;

  friend bool operator==(const SystemState&, const SystemState&) = default;
};

bool is_finite(const SystemState& s);

enum class Provenance { analytic, integrated };

std::string to_string(Provenance p);
/// Throws std::invalid_argument for unknown names.
Provenance provenance_from_string(const std::string& name);

/// Uniformly sampled trajectory. Each sample carries its own time in
/// SystemState::t_l.
struct TimeSeries {
  Provenance provenance = Provenance::analytic;
  std::vector<SystemState> samples;
  EmissionEvent event;
  SimulationConfig config;
};

/// Sample time k of a grid with `intervals` equal steps over [0, span].
/// Every series in the library uses this so that grids built by different
/// routes compare equal bit for bit.
/// The last sample lands on `span` exactly.
inline double grid_time(double span, std::size_t k, std::size_t intervals) {
  if (k == intervals) return span;
  return span * static_cast<double>(k) / static_cast<double>(intervals);
}

using Vec3 = std::array<double, 3>;

/// Rotation about the X^1 axis by `angle` radians:
///   | 1    0      0   |
///   | 0  cos a  sin a |
///   | 0 -sin a  cos a |
Vec3 rotate_so3_x(double angle, const Vec3& v);

}  // namespace inerton
