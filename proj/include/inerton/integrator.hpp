#pragma once

// Numerical oracle for the reduced particle/inerton system. Classical
// fixed-step fourth-order Runge-Kutta over a single period, independent of
// the closed-form evaluators in analytic.hpp.
//
// State vector ordering is (X, X', x_perp, x_perp', x_par).

#include <array>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "inerton/core.hpp"

namespace inerton::integrator {

using StateVector = std::array<double, 5>;

enum Component : std::size_t { kX = 0, kXdot, kPerp, kPerpDot, kPar };

inline constexpr std::array<const char*, 5> component_names = {
    "X", "Xdot", "x_perp", "xdot_perp", "x_par"};

StateVector to_vector(const SystemState& s);
SystemState from_vector(double t_l, const StateVector& y);

/// Time derivative (X', X'', x_perp', x_perp'', x_par') of the state.
StateVector rhs(const EmissionEvent& ev, const StateVector& y);
StateVector rhs(const EmissionEvent& ev, const SystemState& s);

/// Initial state at emission: X=0, X'=v0l, x_perp=0, x_perp'=c, x_par=0.
SystemState initial_state(const EmissionEvent& ev);

/// Thrown when the integration produces a non-finite state.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(std::size_t step, const std::string& what)
      : std::runtime_error(what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// One RK4 step of size dt.
StateVector rk4_step(const EmissionEvent& ev, const StateVector& y, double dt);

/// Integrate slot l from the emission state over [0, t_end] in `steps` equal
/// steps; steps+1 samples with provenance=integrated. Requires
/// 0 < t_end <= T_l and steps >= 2 (std::domain_error otherwise).
TimeSeries integrate(const SimulationConfig& config, int l, double t_end,
                     std::size_t steps);

struct ErrorReport {
  std::array<double, 5> max_abs_error{};
  /// max_abs_error over the component's largest magnitude in either series.
  /// Components that are identically zero in both series report the absolute
  /// error instead.
  std::array<double, 5> max_rel_error{};
  /// max over samples of |X' + (pi/T_l)(v0l/c) x_perp - v0l| / v0l, taken
  /// over both series.
  double first_integral_drift = 0.0;
  std::size_t step_count = 0;
  Provenance first = Provenance::analytic;
  Provenance second = Provenance::analytic;

  double max_rel_error_over(std::initializer_list<Component> comps) const;
};

/// Conserved combination X' + (pi/T_l)(v0l/c) x_perp; equals v0l on exact
/// trajectories.
double first_integral(const EmissionEvent& ev, const SystemState& s);

/// Componentwise comparison. Throws std::invalid_argument when the sample
/// grids or metadata differ.
ErrorReport compare_series(const TimeSeries& a, const TimeSeries& b);

}  // namespace inerton::integrator
