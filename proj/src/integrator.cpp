#include "inerton/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace inerton::integrator {

namespace {

constexpr double pi = std::numbers::pi;

StateVector axpy(const StateVector& y, double a, const StateVector& k) {
  StateVector out;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] + a * k[i];
  return out;
}

bool finite(const StateVector& y) {
  return std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace

StateVector to_vector(const SystemState& s) {
  return {s.X, s.Xdot, s.x_perp, s.xdot_perp, s.x_par};
}

SystemState from_vector(double t_l, const StateVector& y) {
  return {t_l, y[kX], y[kXdot], y[kPerp], y[kPerpDot], y[kPar]};
}

StateVector rhs(const EmissionEvent& ev, const StateVector& y) {
  const double rate = pi / ev.T_l;
  StateVector d;
  d[kX] = y[kXdot];
  d[kXdot] = -rate * (ev.v0l / ev.c) * y[kPerpDot];
  d[kPerp] = y[kPerpDot];
  d[kPerpDot] = rate * (ev.c / ev.v0l) * (y[kXdot] - ev.v0l);
  d[kPar] = 0.0;
  return d;
}

StateVector rhs(const EmissionEvent& ev, const SystemState& s) {
  return rhs(ev, to_vector(s));
}

SystemState initial_state(const EmissionEvent& ev) {
  SystemState s;
  s.Xdot = ev.v0l;
  s.xdot_perp = ev.c;
  return s;
}

StateVector rk4_step(const EmissionEvent& ev, const StateVector& y, double dt) {
  const StateVector k1 = rhs(ev, y);
  const StateVector k2 = rhs(ev, axpy(y, 0.5 * dt, k1));
  const StateVector k3 = rhs(ev, axpy(y, 0.5 * dt, k2));
  const StateVector k4 = rhs(ev, axpy(y, dt, k3));
  StateVector out;
  for (std::size_t i = 0; i < y.size(); ++i) {
    out[i] = y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

TimeSeries integrate(const SimulationConfig& config, int l, double t_end,
                     std::size_t steps) {
  const EmissionEvent ev = emission_schedule(config, l);
  if (steps < 2) {
    throw std::domain_error("integrate: steps=" + std::to_string(steps) +
                            " must be >= 2");
  }
  if (!(t_end > 0.0 && t_end <= ev.T_l)) {
    throw std::domain_error("integrate: t_end must lie in (0, T_l=" +
                            std::to_string(ev.T_l) + "]");
  }

  TimeSeries series;
  series.provenance = Provenance::integrated;
  series.event = ev;
  series.config = config;
  series.samples.reserve(steps + 1);

  StateVector y = to_vector(initial_state(ev));
  series.samples.push_back(from_vector(0.0, y));
  const double dt = t_end / static_cast<double>(steps);
  for (std::size_t k = 1; k <= steps; ++k) {
    y = rk4_step(ev, y, dt);
    if (!finite(y)) {
      throw NumericalFailure(k, "integrate: non-finite state at step " +
                                    std::to_string(k));
    }
    series.samples.push_back(from_vector(grid_time(t_end, k, steps), y));
  }
  return series;
}

double ErrorReport::max_rel_error_over(std::initializer_list<Component> comps) const {
  double worst = 0.0;
  for (Component c : comps) worst = std::max(worst, max_rel_error[c]);
  return worst;
}

double first_integral(const EmissionEvent& ev, const SystemState& s) {
  return s.Xdot + (pi / ev.T_l) * (ev.v0l / ev.c) * s.x_perp;
}

ErrorReport compare_series(const TimeSeries& a, const TimeSeries& b) {
  if (a.samples.size() != b.samples.size()) {
    throw std::invalid_argument("compare_series: sample counts differ (" +
                                std::to_string(a.samples.size()) + " vs " +
                                std::to_string(b.samples.size()) + ")");
  }
  if (!(a.event == b.event) || !(a.config == b.config)) {
    throw std::invalid_argument("compare_series: series metadata differ");
  }
  for (std::size_t k = 0; k < a.samples.size(); ++k) {
    if (a.samples[k].t_l != b.samples[k].t_l) {
      throw std::invalid_argument("compare_series: sample grids differ at index " +
                                  std::to_string(k));
    }
  }

  ErrorReport report;
  report.first = a.provenance;
  report.second = b.provenance;
  report.step_count = a.samples.empty() ? 0 : a.samples.size() - 1;

  std::array<double, 5> magnitude{};
  const EmissionEvent& ev = a.event;
  for (std::size_t k = 0; k < a.samples.size(); ++k) {
    const StateVector ya = to_vector(a.samples[k]);
    const StateVector yb = to_vector(b.samples[k]);
    for (std::size_t i = 0; i < ya.size(); ++i) {
      report.max_abs_error[i] = std::max(report.max_abs_error[i], std::abs(ya[i] - yb[i]));
      magnitude[i] = std::max({magnitude[i], std::abs(ya[i]), std::abs(yb[i])});
    }
    for (const SystemState* s : {&a.samples[k], &b.samples[k]}) {
      report.first_integral_drift =
          std::max(report.first_integral_drift,
                   std::abs(first_integral(ev, *s) - ev.v0l) / ev.v0l);
    }
  }
  for (std::size_t i = 0; i < magnitude.size(); ++i) {
    report.max_rel_error[i] = magnitude[i] > 0.0
                                  ? report.max_abs_error[i] / magnitude[i]
                                  : report.max_abs_error[i];
  }
  return report;
}

}  // namespace inerton::integrator
