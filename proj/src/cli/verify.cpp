#include "inerton/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>

#include "inerton/analytic.hpp"
#include "inerton/cli/formats.hpp"
#include "inerton/integrator.hpp"
#include "inerton/observables.hpp"
#include "inerton/wavemech.hpp"

namespace inerton::cli {

namespace {

constexpr double pi = std::numbers::pi;

using integrator::Component;

double rel(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

CheckResult bounded(std::string name, double measured, double tolerance) {
  CheckResult r;
  r.name = std::move(name);
  r.status = measured <= tolerance ? CheckStatus::pass : CheckStatus::fail;
  r.measured = format_number(measured);
  r.tolerance = format_number(tolerance);
  return r;
}

CheckResult oracle_equivalence(const SimulationConfig& config) {
  const int steps = config.steps_per_period;
  const auto a = analytic::trajectory_series(config, 0, 1, steps);
  const auto b = integrator::integrate(config, 0, a.event.T_l, static_cast<std::size_t>(steps));
  const auto report = integrator::compare_series(a, b);
  auto r = bounded("oracle_equivalence",
                   report.max_rel_error_over({integrator::kX, integrator::kXdot,
                                              integrator::kPerp, integrator::kPerpDot}),
                   oracle_tolerance(steps));
  r.details.emplace_back("steps", std::to_string(steps));
  for (std::size_t i = 0; i < 4; ++i) {
    r.details.emplace_back(std::string("max_rel_error.") + integrator::component_names[i],
                           format_number(report.max_rel_error[i]));
  }
  return r;
}

CheckResult first_integral_drift(const SimulationConfig& config) {
  const int steps = config.steps_per_period;
  const auto a = analytic::trajectory_series(config, 0, 1, steps);
  const auto b = integrator::integrate(config, 0, a.event.T_l, static_cast<std::size_t>(steps));
  auto r = bounded("first_integral_drift",
                   integrator::compare_series(a, b).first_integral_drift, 1e-9);
  r.details.emplace_back("steps", std::to_string(steps));
  return r;
}

CheckResult convergence_order(const SimulationConfig& config) {
  std::vector<double> errors;
  for (int steps : kConvergenceLevels) {
    const auto a = analytic::trajectory_series(config, 0, 1, steps);
    const auto b = integrator::integrate(config, 0, a.event.T_l, static_cast<std::size_t>(steps));
    const auto report = integrator::compare_series(a, b);
    errors.push_back(*std::max_element(report.max_abs_error.begin(),
                                       report.max_abs_error.begin() + 4));
  }
  CheckResult r;
  r.name = "convergence_order";
  r.tolerance = "[12,20]";
  bool ok = true;
  double worst = 16.0;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double ratio = errors[i - 1] / errors[i];
    ok = ok && ratio >= 12.0 && ratio <= 20.0;
    if (std::abs(ratio - 16.0) >= std::abs(worst - 16.0)) worst = ratio;
    r.details.emplace_back("ratio." + std::to_string(kConvergenceLevels[i - 1]) + "_to_" +
                               std::to_string(kConvergenceLevels[i]),
                           format_number(ratio));
  }
  r.measured = format_number(worst);
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

CheckResult velocity_periodicity(const SimulationConfig& config) {
  double worst = 0.0;
  for (const auto& ev : emission_table(config)) {
    worst = std::max(worst, rel(analytic::particle_velocity(ev, 0.0), ev.v0l));
    worst = std::max(worst, std::abs(analytic::particle_velocity(ev, ev.T_l / 2)) / ev.v0l);
    worst = std::max(worst, rel(analytic::particle_velocity(ev, ev.T_l), ev.v0l));
  }
  return bounded("velocity_periodicity", worst, 1e-12);
}

CheckResult perp_maximum(const SimulationConfig& config) {
  double worst = 0.0;
  for (const auto& ev : emission_table(config)) {
    const double peak = ev.Lambda_l / pi;
    worst = std::max(worst, rel(analytic::inerton_perp_position(ev, ev.T_l / 2), peak));
    constexpr int grid = 1000;
    for (int k = 0; k <= grid; ++k) {
      const double x = analytic::inerton_perp_position(ev, grid_time(ev.T_l, k, grid));
      worst = std::max(worst, std::max(0.0, x - peak) / peak);
    }
  }
  return bounded("perp_maximum", worst, 1e-9);
}

CheckResult closed_form_first_integral(const SimulationConfig& config) {
  double worst = 0.0;
  const auto series = analytic::trajectory_series(config, 0, 1, 1000);
  for (const auto& s : series.samples) {
    worst = std::max(worst, rel(integrator::first_integral(series.event, s), series.event.v0l));
  }
  return bounded("closed_form_first_integral", worst, 1e-12);
}

CheckResult ode_residual(const SimulationConfig& config) {
  double worst = 0.0;
  for (const auto& ev : emission_table(config)) {
    const double rate = pi / ev.T_l;
    constexpr int grid = 200;
    for (int k = 0; k <= grid; ++k) {
      const double t = grid_time(ev.T_l, k, grid);
      const double a_par = analytic::particle_acceleration(ev, t);
      const double a_perp = analytic::inerton_perp_acceleration(ev, t);
      const double v_par = analytic::particle_velocity(ev, t);
      const double v_perp = analytic::inerton_perp_velocity(ev, t);
      const double term1 = rate * (ev.v0l / ev.c) * v_perp;
      const double term2 = rate * (ev.c / ev.v0l) * (v_par - ev.v0l);
      const double scale1 = rate * ev.v0l;  // largest term magnitude in each equation
      const double scale2 = rate * ev.c;
      worst = std::max(worst, std::abs(a_par + term1) / scale1);
      worst = std::max(worst, std::abs(a_perp - term2) / scale2);
      const double harmonic = a_perp + rate * rate * analytic::inerton_perp_position(ev, t);
      worst = std::max(worst, std::abs(harmonic) / scale2);
    }
  }
  return bounded("ode_residual", worst, 1e-9);
}

CheckResult emission_ladder(const SimulationConfig& config) {
  const auto table = emission_table(config);
  double ulps = 0.0;
  double freq = 0.0;
  bool monotone = true;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& ev = table[i];
    const double lhs = ev.m_l * ev.c * ev.c;
    const double rhs = config.M * ev.v0l * ev.v0l;
    const double ulp = std::nextafter(rhs, INFINITY) - rhs;
    ulps = std::max(ulps, std::abs(lhs - rhs) / ulp);
    const double inv_T = 1.0 / ev.T_l;
    freq = std::max({freq, rel(ev.v0l / ev.lambda_l, inv_T), rel(ev.c / ev.Lambda_l, inv_T)});
    if (i > 0 && ev.v0l > table[i - 1].v0l) monotone = false;
  }
  CheckResult r;
  r.name = "emission_ladder";
  r.measured = format_number(ulps);
  r.tolerance = "4";
  r.details.emplace_back("frequency_consistency", format_number(freq));
  r.details.emplace_back("v0l_nonincreasing", monotone ? "true" : "false");
  r.status = ulps <= 4.0 && freq <= 1e-12 && monotone ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

CheckResult amplitude_ratio(const SimulationConfig& config) {
  const double ratio = observables::cloud_amplitude(config) /
                       observables::de_broglie_wavelength(config);
  return bounded("amplitude_ratio", rel(ratio, config.c / config.v0), 1e-12);
}

CheckResult action_calibration(const SimulationConfig& config) {
  const SimulationConfig cal = observables::calibrate_action(config);
  const auto q = observables::quantum_relations(cal);
  const double lambda = observables::de_broglie_wavelength(cal);
  const double worst = std::max({rel(observables::action_increment(cal), cal.h),
                                 rel(q.E, cal.h * q.nu), rel(q.p0, cal.h / lambda),
                                 rel(observables::mechanical_wavelength(cal), lambda)});
  auto r = bounded("action_calibration", worst, 1e-12);
  r.details.emplace_back("calibrated_T_s", format_number(cal.T));
  return r;
}

CheckResult action_quadrature(const SimulationConfig& config) {
  const auto osc = wavemech::make_oscillator(config);
  const double loop = wavemech::action_loop_quadrature(osc);
  auto r = bounded("action_quadrature", rel(loop, wavemech::action_angle_J(osc)), 1e-9);
  r.details.emplace_back("loop_integral_erg_s", format_number(loop));
  return r;
}

CheckResult action_identity(const SimulationConfig& config) {
  const SimulationConfig cal = observables::calibrate_action(config);
  const auto wave = wavemech::de_broglie_wave(cal);
  const auto q = observables::quantum_relations(cal);
  double worst = 0.0;
  for (int i = -5; i <= 5; ++i) {
    for (int j = 0; j <= 10; ++j) {
      const double X = 0.37 * i * wave.wavelength;
      const double t = 0.53 * j / wave.frequency;
      const double scale = std::abs(q.p0 * X) + std::abs(q.E * t);
      if (scale == 0.0) continue;
      const double diff = wavemech::particle_action(X, t, cal) - wavemech::wave_action(X, t, wave);
      worst = std::max(worst, std::abs(diff) / scale);
    }
  }
  return bounded("action_identity", worst, 1e-12);
}

CheckResult wave_equation(const SimulationConfig& config) {
  auto wave = wavemech::de_broglie_wave(config);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    worst = std::max(worst, wavemech::wave_equation_residual(0.3 * k * wave.wavelength,
                                                             0.7 * k / wave.frequency, wave,
                                                             config.v0));
  }
  wave.frequency *= 1.1;
  const double detuned = wavemech::wave_equation_residual(0.0, 0.0, wave, config.v0);
  auto r = bounded("wave_equation_residual", worst, 1e-12);
  r.details.emplace_back("detuned_residual", format_number(detuned));
  r.details.emplace_back("detuned_minimum", "0.2");
  if (!(detuned > 0.2)) r.status = CheckStatus::fail;
  return r;
}

CheckResult hamilton_jacobi(const SimulationConfig& config) {
  const auto osc = wavemech::make_oscillator(config);
  double worst = 0.0;
  for (int k = -9; k <= 9; ++k) {
    const double X = 0.1 * k * osc.amplitude;
    worst = std::max(worst, std::abs(wavemech::hj_residual(X, osc)) / osc.E);
  }
  return bounded("hamilton_jacobi_residual", worst, 1e-6);
}

CheckResult oscillator_amplitude(const SimulationConfig& config) {
  const auto osc = wavemech::make_oscillator(config);
  return bounded("oscillator_amplitude",
                 rel(osc.amplitude, observables::mechanical_wavelength(config) / pi), 1e-12);
}

CheckResult energy_conservation(const SimulationConfig& config) {
  const auto osc = wavemech::make_oscillator(config);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double t = 2.0 * osc.T * k / 100.0;
    const double H = wavemech::effective_hamiltonian(wavemech::oscillator_momentum(t, osc),
                                                     wavemech::oscillator_position(t, osc), osc);
    worst = std::max(worst, rel(H, osc.E));
  }
  return bounded("oscillator_energy", worst, 1e-12);
}

CheckResult stitching(const SimulationConfig& config) {
  const int n_max = std::max(config.n_oscillations, 2);
  constexpr int per = 64;
  const auto series = analytic::trajectory_series(config, 0, n_max, per);
  const double advance = analytic::period_advance(series.event);
  bool monotone = true;
  double boundary = 0.0;
  for (std::size_t k = 1; k < series.samples.size(); ++k) {
    if (series.samples[k].X < series.samples[k - 1].X) monotone = false;
  }
  for (int n = 1; n <= n_max; ++n) {
    const double X = series.samples[static_cast<std::size_t>(n * per)].X;
    boundary = std::max(boundary, rel(X, n * advance));
  }
  auto r = bounded("trajectory_stitching", boundary, 1e-12);
  r.details.emplace_back("X_nondecreasing", monotone ? "true" : "false");
  if (!monotone) r.status = CheckStatus::fail;
  return r;
}

CheckResult period_advance_consistency(const SimulationConfig& config) {
  const EmissionEvent ev = emission_schedule(config, 0);
  CheckResult r;
  r.name = "period_advance_consistency";
  r.status = CheckStatus::info;
  const double closed = analytic::period_advance(ev);
  const double drift = analytic::period_advance_drift_form(ev);
  r.measured = format_number(closed);
  r.tolerance = "n/a";
  r.details.emplace_back("closed_form_cm", format_number(closed));
  r.details.emplace_back("closed_form_over_v0l_T_l", format_number(closed / (ev.v0l * ev.T_l)));
  r.details.emplace_back("drift_form_cm", format_number(drift));
  r.details.emplace_back("drift_form_over_v0l_T_l", format_number(drift / (ev.v0l * ev.T_l)));
  r.details.emplace_back("note",
                         "path per period from the closed-form position (1-2/pi) v0l T_l "
                         "differs from the drift-speed form 3 pi v0l T_l/2");
  return r;
}

using Check = std::function<CheckResult(const SimulationConfig&)>;

struct NamedCheck {
  const char* name;
  Check run;
};

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::info: return "info";
  }
  return "fail";
}

double oracle_tolerance(long long steps) {
  if (steps >= 1000) return 1e-7;
  if (steps >= 100) return 1e-6;
  if (steps >= 10) return 1e-3;
  return 0.5;
}

std::vector<CheckResult> run_checks(const SimulationConfig& config) {
  const std::vector<NamedCheck> checks = {
      {"oracle_equivalence", oracle_equivalence},
      {"first_integral_drift", first_integral_drift},
      {"convergence_order", convergence_order},
      {"velocity_periodicity", velocity_periodicity},
      {"perp_maximum", perp_maximum},
      {"closed_form_first_integral", closed_form_first_integral},
      {"ode_residual", ode_residual},
      {"emission_ladder", emission_ladder},
      {"amplitude_ratio", amplitude_ratio},
      {"action_calibration", action_calibration},
      {"action_quadrature", action_quadrature},
      {"action_identity", action_identity},
      {"wave_equation_residual", wave_equation},
      {"hamilton_jacobi_residual", hamilton_jacobi},
      {"oscillator_amplitude", oscillator_amplitude},
      {"oscillator_energy", energy_conservation},
      {"trajectory_stitching", stitching},
      {"period_advance_consistency", period_advance_consistency},
  };

  std::vector<CheckResult> results(checks.size());
  const auto count = static_cast<long long>(checks.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    const auto& check = checks[static_cast<std::size_t>(i)];
    try {
      results[static_cast<std::size_t>(i)] = check.run(config);
    } catch (const std::exception& e) {
      CheckResult r;
      r.name = check.name;
      r.status = CheckStatus::fail;
      r.measured = "error";
      r.tolerance = "n/a";
      r.details.emplace_back("error", e.what());
      results[static_cast<std::size_t>(i)] = std::move(r);
    }
  }
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const CheckResult& r) { return r.status == CheckStatus::fail; });
}

std::string format_report(const std::vector<CheckResult>& results) {
  KeyValueDoc doc;
  doc.comment("inerton verify report");
  long long passed = 0, failed = 0, info = 0;
  for (const auto& r : results) {
    const std::string prefix = "check." + r.name + ".";
    doc.add(prefix + "status", to_string(r.status));
    doc.add(prefix + "measured", r.measured);
    doc.add(prefix + "tolerance", r.tolerance);
    for (const auto& [k, v] : r.details) doc.add(prefix + k, v);
    switch (r.status) {
      case CheckStatus::pass: ++passed; break;
      case CheckStatus::fail: ++failed; break;
      case CheckStatus::info: ++info; break;
    }
  }
  doc.add("summary.passed", passed);
  doc.add("summary.failed", failed);
  doc.add("summary.informational", info);
  doc.add("summary.result", std::string_view(failed == 0 ? "pass" : "fail"));
  return doc.str();
}

}  // namespace inerton::cli
