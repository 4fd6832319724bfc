#pragma once

// Closed-form solutions of the reduced particle/inerton system
//
//   X''      + (pi/T_l)(v0l/c) x_perp'      = 0
//   x_perp'' - (pi/T_l)(c/v0l) (X' - v0l)  = 0
//   x_par'   = 0
//
// with X(0) = 0, X'(0) = v0l, x_perp(0) = 0, x_perp'(0) = c.
// The single-period evaluators are valid on 0 <= t_l <= T_l only and throw
// std::domain_error outside it.

#include "inerton/core.hpp"

namespace inerton::analytic {

/// (Lambda_l/pi) sin(pi t_l/T_l)
double inerton_perp_position(const EmissionEvent& ev, double t_l);
/// c cos(pi t_l/T_l)
double inerton_perp_velocity(const EmissionEvent& ev, double t_l);
/// -(pi/T_l) c sin(pi t_l/T_l)
double inerton_perp_acceleration(const EmissionEvent& ev, double t_l);

/// v0l (1 - sin(pi t_l/T_l)), in [0, v0l].
double particle_velocity(const EmissionEvent& ev, double t_l);
/// v0l t_l + (lambda_l/pi)(cos(pi t_l/T_l) - 1); the integral of
/// particle_velocity from 0.
double particle_position(const EmissionEvent& ev, double t_l);
/// -(pi/T_l) v0l cos(pi t_l/T_l)
double particle_acceleration(const EmissionEvent& ev, double t_l);

/// Full single-period state at t_l. x_par is 0 (x_par' = 0 from rest).
SystemState state_at(const EmissionEvent& ev, double t_l);

/// Path length covered in one period, X_l(T_l) = v0l T_l (1 - 2/pi).
double period_advance(const EmissionEvent& ev);

/// The value 3 pi v0l T_l / 2 that the drift-speed derivation equates to
/// X_l(T_l). Reported next to period_advance; the two do not agree.
double period_advance_drift_form(const EmissionEvent& ev);

/// Quasicyclic relabeling t_nl = t_l + 2(n-1) T_l for oscillation n >= 1.
double quasicyclic_time(double t_l, int n, const EmissionEvent& ev);

/// Emission delay in the drift-window form, T_l l/(2N). Differs from
/// EmissionEvent::delta_t_l = T l/(2N) for l > 0.
double window_delay(const EmissionEvent& ev);

/// tau_nl = (2n-1) window_delay + (n-1) T_l.
double parallel_window_start(const EmissionEvent& ev, int n);

/// Longitudinal inerton speed in window n: (3 pi/2) v0l for
/// tau_nl <= t <= tau_nl + T_l, zero otherwise (Theta(0) = 1).
double parallel_velocity(const EmissionEvent& ev, int n, double t);

/// Longitudinal inerton displacement at particle time t accumulated over
/// windows 1..n_max, i.e. the integral of parallel_velocity from 0 to t.
double parallel_displacement(const EmissionEvent& ev, int n_max, double t);

/// Stitched trajectory over n_max oscillations with samples_per_period
/// intervals per oscillation; n_max*samples_per_period + 1 samples.
///
/// Oscillation n covers t in [(n-1) T_l, n T_l]. X carries the accumulated
/// offset (n-1) X_l(T_l) so it is continuous and nondecreasing. A sample on
/// an interior boundary belongs to the start of the next oscillation (fresh
/// emission, x_perp' = +c); the final sample is the end of the last one.
///
/// OpenMP over samples; bit-identical to trajectory_series_serial.
TimeSeries trajectory_series(const SimulationConfig& config, int l, int n_max,
                             int samples_per_period);

/// Serial reference for trajectory_series.
TimeSeries trajectory_series_serial(const SimulationConfig& config, int l,
                                    int n_max, int samples_per_period);

}  // namespace inerton::analytic
