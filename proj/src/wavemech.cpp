#include "inerton/wavemech.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "inerton/observables.hpp"

namespace inerton::wavemech {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kFdStep = 1e-7;  // relative to amplitude
// |S1| <= E T/2, so a relative tolerance of 1e-12 keeps the absolute error
// below 1e-12 E T.
constexpr double kQuadratureRelTol = 1e-12;

double momentum_at(double x, const OscillatorParams& osc) {
  const double kinetic = osc.E - osc.M * osc.omega * osc.omega * x * x / 2.0;
  return std::sqrt(std::max(0.0, 2.0 * osc.M * kinetic));
}

}  // namespace

OscillatorParams make_oscillator(double M, double E, double T) {
  OscillatorParams osc;
  osc.M = M;
  osc.E = E;
  osc.T = T;
  osc.omega = pi / T;
  osc.amplitude = std::sqrt(2.0 * E / M) / osc.omega;
  return osc;
}

OscillatorParams make_oscillator(const SimulationConfig& config) {
  return make_oscillator(config.M, observables::quantum_relations(config).E, config.T);
}

double effective_hamiltonian(double p, double X, const OscillatorParams& osc) {
  return p * p / (2.0 * osc.M) + osc.M * osc.omega * osc.omega * X * X / 2.0;
}

double shortened_action(double X, const OscillatorParams& osc) {
  if (!(std::abs(X) <= osc.amplitude)) {
    throw std::domain_error("shortened_action: |X| exceeds the turning point " +
                            std::to_string(osc.amplitude));
  }
  if (X == 0.0) return 0.0;
  const double theta_end = std::asin(std::clamp(X / osc.amplitude, -1.0, 1.0));
  auto integrand = [&](double theta) {
    return momentum_at(osc.amplitude * std::sin(theta), osc) * osc.amplitude *
           std::cos(theta);
  };
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, 0.0, theta_end, 15, kQuadratureRelTol);
}

double hj_residual(double X, const OscillatorParams& osc) {
  const double step = kFdStep * osc.amplitude;
  if (!(std::abs(X) + step <= osc.amplitude)) {
    throw std::domain_error(
        "hj_residual: X too close to the turning point for the difference stencil");
  }
  const double dS =
      (shortened_action(X + step, osc) - shortened_action(X - step, osc)) / (2.0 * step);
  return effective_hamiltonian(dS, X, osc) - osc.E;
}

double oscillator_position(double t, const OscillatorParams& osc) {
  return osc.amplitude * std::sin(osc.omega * t);
}

double oscillator_momentum(double t, const OscillatorParams& osc) {
  return osc.M * osc.amplitude * osc.omega * std::cos(osc.omega * t);
}

double action_angle_J(const OscillatorParams& osc) { return osc.E * (2.0 * osc.T); }

double action_loop_quadrature(const OscillatorParams& osc) {
  return 2.0 * (shortened_action(osc.amplitude, osc) -
                shortened_action(-osc.amplitude, osc));
}

double particle_action(double X, double t, const SimulationConfig& config) {
  const auto q = observables::quantum_relations(config);
  return q.p0 * X - q.E * t;
}

PlaneWave de_broglie_wave(const SimulationConfig& config) {
  PlaneWave w;
  w.wavelength = observables::de_broglie_wavelength(config);
  w.frequency = observables::quantum_relations(config).E / config.h;
  w.h = config.h;
  return w;
}

double wave_action(double X, double t, const PlaneWave& wave) {
  return wave.h * (X / wave.wavelength - wave.frequency * t);
}

double wave_action(double X, double t, const SimulationConfig& config) {
  return wave_action(X, t, de_broglie_wave(config));
}

std::complex<double> wave_function(double X, double t, const PlaneWave& wave) {
  const double phase = 2.0 * pi * wave_action(X, t, wave) / wave.h;
  return std::polar(1.0, phase);
}

std::complex<double> wave_function(double X, double t, const SimulationConfig& config) {
  return wave_function(X, t, de_broglie_wave(config));
}

double wave_equation_residual(double X, double t, const PlaneWave& wave, double v0) {
  const std::complex<double> psi = wave_function(X, t, wave);
  const double k = 2.0 * pi / wave.wavelength;
  const double w = 2.0 * pi * wave.frequency;
  const std::complex<double> psi_xx = -(k * k) * psi;
  const std::complex<double> psi_tt = -(w * w) * psi;
  const double speed = v0 / 2.0;
  return std::abs(psi_xx - psi_tt / (speed * speed)) / std::abs(k * k * psi);
}

double wave_equation_residual(double X, double t, const SimulationConfig& config) {
  return wave_equation_residual(X, t, de_broglie_wave(config), config.v0);
}

}  // namespace inerton::wavemech
