#pragma once

// Wave-mechanics layer built on the particle's effective oscillator.
//
// Eliminating the cloud coordinate with x_perp' = chi_perp' + pi sqrt(M/m) X/T
// decouples the particle into a harmonic oscillator
//
//   L_eff = M X'^2/2 - M (pi/T)^2 X^2/2,   H_eff = p^2/2M + M (pi/T)^2 X^2/2.
//
// Everything here works with that oscillator (angular frequency pi/T,
// period 2T) or with the plane wave it is identified with once the action
// per period is set equal to h.

#include <complex>

#include "inerton/core.hpp"

namespace inerton::wavemech {

struct OscillatorParams {
  double M = 0.0;          ///< [g]
  double omega = 0.0;      ///< pi/T [rad/s]
  double E = 0.0;          ///< [erg]
  double amplitude = 0.0;  ///< sqrt(2E/M)/omega [cm]
  double T = 0.0;          ///< half-period [s]
};

/// Oscillator with E = M v0^2/2 and omega = pi/T, so amplitude = v0 T/pi.
OscillatorParams make_oscillator(const SimulationConfig& config);
OscillatorParams make_oscillator(double M, double E, double T);

/// p^2/2M + M omega^2 X^2/2
double effective_hamiltonian(double p, double X, const OscillatorParams& osc);

/// S1(X) = int_0^X sqrt(2M(E - M omega^2 x^2/2)) dx by adaptive
/// Gauss-Kronrod quadrature in the angle variable x = amplitude sin(theta),
/// which removes the square-root endpoint singularity. Odd in X. Throws
/// std::domain_error for |X| > amplitude.
double shortened_action(double X, const OscillatorParams& osc);

/// (dS1/dX)^2/2M + M omega^2 X^2/2 - E with dS1/dX by centered difference of
/// shortened_action at step 1e-7*amplitude. Throws std::domain_error unless
/// |X| + step <= amplitude.
double hj_residual(double X, const OscillatorParams& osc);

/// amplitude sin(omega t)
double oscillator_position(double t, const OscillatorParams& osc);
/// M amplitude omega cos(omega t)
double oscillator_momentum(double t, const OscillatorParams& osc);

/// J = E 2T = E/nu
double action_angle_J(const OscillatorParams& osc);

/// Closed-loop integral of p dX by quadrature, 2 (S1(A) - S1(-A)).
double action_loop_quadrature(const OscillatorParams& osc);

/// M v0 X - E t, the action of uniform free motion.
double particle_action(double X, double t, const SimulationConfig& config);

/// A monochromatic wave of given wavelength and frequency.
struct PlaneWave {
  double wavelength = 0.0;  ///< [cm]
  double frequency = 0.0;   ///< [1/s]
  double h = 0.0;           ///< action quantum [erg*s]
};

/// wavelength h/(M v0), frequency E/h.
PlaneWave de_broglie_wave(const SimulationConfig& config);

/// h (X/lambda - nu t)
double wave_action(double X, double t, const PlaneWave& wave);
double wave_action(double X, double t, const SimulationConfig& config);

/// exp(i 2 pi S_wave/h) with unit amplitude.
std::complex<double> wave_function(double X, double t, const PlaneWave& wave);
std::complex<double> wave_function(double X, double t, const SimulationConfig& config);

/// |psi_XX - psi_tt/(v0/2)^2| / |(2 pi/lambda)^2 psi| with analytic second
/// derivatives of the plane wave. Zero when lambda nu = v0/2.
double wave_equation_residual(double X, double t, const PlaneWave& wave, double v0);
double wave_equation_residual(double X, double t, const SimulationConfig& config);

}  // namespace inerton::wavemech
