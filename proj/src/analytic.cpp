#include "inerton/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace inerton::analytic {

namespace {

constexpr double pi = std::numbers::pi;

void require_in_period(const EmissionEvent& ev, double t_l) {
  if (!(t_l >= 0.0 && t_l <= ev.T_l)) {
    throw std::domain_error("t_l=" + std::to_string(t_l) + " outside [0, T_l=" +
                            std::to_string(ev.T_l) +
                            "]; map through quasicyclic_time first");
  }
}

void require_oscillation_index(int n) {
  if (n < 1) {
    throw std::domain_error("oscillation index n=" + std::to_string(n) +
                            " must be >= 1");
  }
}

double phase(const EmissionEvent& ev, double t_l) { return pi * t_l / ev.T_l; }

// Kernel shared by the serial and parallel series builders.
SystemState stitched_sample(const EmissionEvent& ev, std::size_t k,
                            std::size_t per_period, std::size_t total,
                            double advance) {
  std::size_t osc = k / per_period;  // zero-based oscillation
  std::size_t j = k % per_period;
  if (k == total) {  // final sample closes the last oscillation
    osc -= 1;
    j = per_period;
  }
  const double t_l = grid_time(ev.T_l, j, per_period);
  SystemState s = state_at(ev, t_l);
  s.t_l = grid_time(ev.T_l * static_cast<double>(total / per_period), k, total);
  s.X += static_cast<double>(osc) * advance;
  return s;
}

void check_series_args(int n_max, int samples_per_period) {
  require_oscillation_index(n_max);
  if (samples_per_period < 2) {
    throw std::domain_error("samples_per_period=" +
                            std::to_string(samples_per_period) + " must be >= 2");
  }
}

TimeSeries series_header(const SimulationConfig& config, const EmissionEvent& ev) {
  TimeSeries series;
  series.provenance = Provenance::analytic;
  series.event = ev;
  series.config = config;
  return series;
}

}  // namespace

double inerton_perp_position(const EmissionEvent& ev, double t_l) {
  require_in_period(ev, t_l);
  return ev.Lambda_l / pi * std::sin(phase(ev, t_l));
}

double inerton_perp_velocity(const EmissionEvent& ev, double t_l) {
  require_in_period(ev, t_l);
  return ev.c * std::cos(phase(ev, t_l));
}

double inerton_perp_acceleration(const EmissionEvent& ev, double t_l) {
  require_in_period(ev, t_l);
  return -(pi / ev.T_l) * ev.c * std::sin(phase(ev, t_l));
}

double particle_velocity(const EmissionEvent& ev, double t_l) {
  require_in_period(ev, t_l);
  return ev.v0l * (1.0 - std::sin(phase(ev, t_l)));
}

double particle_position(const EmissionEvent& ev, double t_l) {
  require_in_period(ev, t_l);
  return ev.v0l * t_l + ev.lambda_l / pi * (std::cos(phase(ev, t_l)) - 1.0);
}

double particle_acceleration(const EmissionEvent& ev, double t_l) {
  require_in_period(ev, t_l);
  return -(pi / ev.T_l) * ev.v0l * std::cos(phase(ev, t_l));
}

SystemState state_at(const EmissionEvent& ev, double t_l) {
  require_in_period(ev, t_l);
  const double s = std::sin(phase(ev, t_l));
  const double c = std::cos(phase(ev, t_l));
  SystemState out;
  out.t_l = t_l;
  out.X = ev.v0l * t_l + ev.lambda_l / pi * (c - 1.0);
  out.Xdot = ev.v0l * (1.0 - s);
  out.x_perp = ev.Lambda_l / pi * s;
  out.xdot_perp = ev.c * c;
  out.x_par = 0.0;
  return out;
}

double period_advance(const EmissionEvent& ev) {
  return particle_position(ev, ev.T_l);
}

double period_advance_drift_form(const EmissionEvent& ev) {
  return 3.0 * pi * ev.v0l * ev.T_l / 2.0;
}

double quasicyclic_time(double t_l, int n, const EmissionEvent& ev) {
  require_oscillation_index(n);
  require_in_period(ev, t_l);
  return t_l + 2.0 * (n - 1) * ev.T_l;
}

double window_delay(const EmissionEvent& ev) {
  return ev.T_l * ev.l / (2.0 * ev.N);
}

double parallel_window_start(const EmissionEvent& ev, int n) {
  require_oscillation_index(n);
  return (2.0 * n - 1.0) * window_delay(ev) + (n - 1.0) * ev.T_l;
}

double parallel_velocity(const EmissionEvent& ev, int n, double t) {
  const double tau = parallel_window_start(ev, n);
  const bool open = (t - tau) >= 0.0;
  const bool closed = (tau + ev.T_l - t) >= 0.0;
  return open && closed ? 1.5 * pi * ev.v0l : 0.0;
}

double parallel_displacement(const EmissionEvent& ev, int n_max, double t) {
  require_oscillation_index(n_max);
  double x = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double tau = parallel_window_start(ev, n);
    x += 1.5 * pi * ev.v0l * std::clamp(t - tau, 0.0, ev.T_l);
  }
  return x;
}

TimeSeries trajectory_series_serial(const SimulationConfig& config, int l,
                                    int n_max, int samples_per_period) {
  check_series_args(n_max, samples_per_period);
  const EmissionEvent ev = emission_schedule(config, l);
  const double advance = period_advance(ev);
  const auto per = static_cast<std::size_t>(samples_per_period);
  const std::size_t total = per * static_cast<std::size_t>(n_max);

  TimeSeries series = series_header(config, ev);
  series.samples.resize(total + 1);
  for (std::size_t k = 0; k <= total; ++k) {
    series.samples[k] = stitched_sample(ev, k, per, total, advance);
  }
  return series;
}

TimeSeries trajectory_series(const SimulationConfig& config, int l, int n_max,
                             int samples_per_period) {
  check_series_args(n_max, samples_per_period);
  const EmissionEvent ev = emission_schedule(config, l);
  const double advance = period_advance(ev);
  const auto per = static_cast<std::size_t>(samples_per_period);
  const std::size_t total = per * static_cast<std::size_t>(n_max);

  TimeSeries series = series_header(config, ev);
  series.samples.resize(total + 1);
  const auto count = static_cast<long long>(total + 1);
#pragma omp parallel for schedule(static)
  for (long long k = 0; k < count; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    series.samples[uk] = stitched_sample(ev, uk, per, total, advance);
  }
  return series;
}

}  // namespace inerton::analytic
