#pragma once

// Test-only helpers: random config generators and closed-form oracles that
// do not go through the library code they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "inerton/core.hpp"

namespace inerton::testing {

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

/// Number of representable doubles between a and b.
inline std::int64_t ulp_distance(double a, double b) {
  std::int64_t n = 0;
  double x = std::min(a, b);
  const double hi = std::max(a, b);
  while (x < hi && n < 1000) {
    x = std::nextafter(x, hi);
    ++n;
  }
  return n;
}

/// Valid configs spread over many orders of magnitude.
class ConfigGenerator {
 public:
  explicit ConfigGenerator(std::uint64_t seed) : rng_(seed) {}

  SimulationConfig operator()() {
    std::uniform_real_distribution<double> exponent(-3.0, 3.0);
    std::uniform_real_distribution<double> fraction(0.01, 0.99);
    std::uniform_int_distribution<int> slots(1, 64);
    SimulationConfig c;
    c.M = std::pow(10.0, exponent(rng_) * 5.0);
    c.c = std::pow(10.0, exponent(rng_) * 3.0);
    c.v0 = fraction(rng_) * c.c;
    c.T = std::pow(10.0, exponent(rng_) * 3.0);
    c.N = slots(rng_);
    c.h = std::pow(10.0, exponent(rng_) * 5.0);
    c.R0 = std::pow(10.0, exponent(rng_) * 5.0);
    return c;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// int_0^X sqrt(2M(E - M w^2 x^2/2)) dx in closed form:
/// (p_max A/2)(theta + sin theta cos theta), X = A sin theta.
inline double shortened_action_closed_form(double X, double M, double E, double omega) {
  const double A = std::sqrt(2.0 * E / M) / omega;
  const double p_max = std::sqrt(2.0 * M * E);
  const double theta = std::asin(X / A);
  return p_max * A / 2.0 * (theta + std::sin(theta) * std::cos(theta));
}

}  // namespace inerton::testing
