#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "inerton/analytic.hpp"
#include "inerton/integrator.hpp"
#include "support.hpp"

using namespace inerton;
using namespace inerton::integrator;
using inerton::testing::rel_diff;

namespace {

constexpr double pi = std::numbers::pi;

SimulationConfig unit_config() {
  SimulationConfig c;
  c.M = 1.0;
  c.v0 = 1.0;
  c.c = 10.0;
  c.T = 1.0;
  c.N = 10;
  return c;
}

double error_at(std::size_t steps, int l = 0) {
  const auto c = unit_config();
  const auto ev = emission_schedule(c, l);
  const auto numeric = integrate(c, l, ev.T_l, steps);
  const auto exact = analytic::trajectory_series(c, l, 1, steps);
  return compare_series(exact, numeric).max_rel_error_over({kX, kXdot, kPerp, kPerpDot});
}

}  // namespace

TEST_SUITE("integrator") {

TEST_CASE("rhs at emission") {
  const auto ev = emission_schedule(unit_config(), 0);
  const auto d = rhs(ev, initial_state(ev));
  CHECK(d[kX] == 1.0);
  CHECK(rel_diff(d[kXdot], -pi) <= 1e-15);  // -(pi/T)(v0/c) c
  CHECK(d[kPerp] == 10.0);
  CHECK(d[kPerpDot] == 0.0);
  CHECK(d[kPar] == 0.0);
}

TEST_CASE("rhs mid-period") {
  const auto ev = emission_schedule(unit_config(), 0);
  const StateVector y{0.0, 0.0, 10.0 / pi, 0.0, 0.0};
  const auto d = rhs(ev, y);
  CHECK(d[kXdot] == 0.0);
  CHECK(rel_diff(d[kPerpDot], -10.0 * pi) <= 1e-15);  // (pi/T)(c/v0)(0 - v0)
}

TEST_CASE("state vector round trip") {
  const SystemState s{0.25, 1.0, 2.0, 3.0, 4.0, 5.0};
  CHECK(from_vector(0.25, to_vector(s)) == s);
}

TEST_CASE("integration reproduces the closed form") {
  const auto c = unit_config();
  for (int l : {0, 3, 7}) {
    const auto ev = emission_schedule(c, l);
    const auto numeric = integrate(c, l, ev.T_l, 10000);
    REQUIRE(numeric.samples.size() == 10001);
    CHECK(numeric.provenance == Provenance::integrated);
    CHECK(numeric.samples.front() == initial_state(ev));
    CHECK(numeric.samples.back().t_l == ev.T_l);
    const auto exact = analytic::trajectory_series(c, l, 1, 10000);
    const auto report = compare_series(exact, numeric);
    CHECK(report.max_rel_error_over({kX, kXdot, kPerp, kPerpDot}) <= 1e-9);
    CHECK(report.max_abs_error[kPar] == 0.0);
    CHECK(report.step_count == 10000);
  }
}

TEST_CASE("partial span keeps the time grid") {
  const auto c = unit_config();
  const auto numeric = integrate(c, 0, 0.5, 500);
  CHECK(numeric.samples.back().t_l == 0.5);
  CHECK(std::abs(numeric.samples.back().Xdot) <= 1e-12);
}

TEST_CASE("argument checks") {
  const auto c = unit_config();
  CHECK_THROWS_AS(integrate(c, 0, 1.0, 1), std::domain_error);
  CHECK_THROWS_AS(integrate(c, 0, 0.0, 100), std::domain_error);
  CHECK_THROWS_AS(integrate(c, 0, 1.5, 100), std::domain_error);
  CHECK_THROWS_AS(integrate(c, 10, 1.0, 100), std::domain_error);
  CHECK_NOTHROW(integrate(c, 0, 1e-12, 2));
}

TEST_CASE("integration is deterministic") {
  const auto c = unit_config();
  CHECK(integrate(c, 4, 0.6, 777).samples == integrate(c, 4, 0.6, 777).samples);
}

TEST_CASE("linear system scales with the velocities") {
  // Doubling v0 and c doubles every coordinate exactly (power-of-two scaling).
  inerton::testing::ConfigGenerator gen(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = gen();
    auto c2 = c;
    c2.v0 *= 2.0;
    c2.c *= 2.0;
    const int l = trial % c.N;
    const auto ev = emission_schedule(c, l);
    const auto a = integrate(c, l, ev.T_l, 200);
    const auto b = integrate(c2, l, ev.T_l, 200);
    for (std::size_t k = 0; k < a.samples.size(); ++k) {
      CHECK(b.samples[k].X == 2.0 * a.samples[k].X);
      CHECK(b.samples[k].Xdot == 2.0 * a.samples[k].Xdot);
      CHECK(b.samples[k].x_perp == 2.0 * a.samples[k].x_perp);
      CHECK(b.samples[k].xdot_perp == 2.0 * a.samples[k].xdot_perp);
    }
  }
}

TEST_CASE("parallel coordinate stays at rest") {
  inerton::testing::ConfigGenerator gen(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = gen();
    const auto ev = emission_schedule(c, 0);
    for (const auto& s : integrate(c, 0, ev.T_l, 100).samples) CHECK(s.x_par == 0.0);
  }
}

TEST_CASE("compare_series") {
  const auto c = unit_config();
  const auto a = integrate(c, 2, 0.5, 100);
  SUBCASE("self comparison is exact") {
    const auto r = compare_series(a, a);
    for (double e : r.max_abs_error) CHECK(e == 0.0);
    for (double e : r.max_rel_error) CHECK(e == 0.0);
    CHECK(r.first == Provenance::integrated);
  }
  SUBCASE("mismatched grids are rejected") {
    CHECK_THROWS_AS(compare_series(a, integrate(c, 2, 0.5, 101)), std::invalid_argument);
    CHECK_THROWS_AS(compare_series(a, integrate(c, 2, 0.4, 100)), std::invalid_argument);
    CHECK_THROWS_AS(compare_series(a, integrate(c, 3, 0.5, 100)), std::invalid_argument);
  }
}

TEST_CASE("fourth-order convergence") {
  const double e32 = error_at(32);
  const double e64 = error_at(64);
  const double e128 = error_at(128);
  CHECK(e32 / e64 >= 12.0);
  CHECK(e32 / e64 <= 20.0);
  CHECK(e64 / e128 >= 12.0);
  CHECK(e64 / e128 <= 20.0);
}

TEST_CASE("decade refinement gains four orders above the rounding floor") {
  const double ratio = error_at(100) / error_at(1000);
  CHECK(ratio >= 0.5e4);
  CHECK(ratio <= 2e4);
}

TEST_CASE("first integral drift") {
  inerton::testing::ConfigGenerator gen(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = gen();
    const int l = trial % c.N;
    const auto ev = emission_schedule(c, l);
    const auto numeric = integrate(c, l, ev.T_l, 1000);
    double drift = 0.0;
    for (const auto& s : numeric.samples) {
      drift = std::max(drift, std::abs(first_integral(ev, s) - ev.v0l) / ev.v0l);
    }
    CHECK(drift <= 1e-9);
  }
}

TEST_CASE("non-finite states are reported with the step") {
  auto c = unit_config();
  c.c = std::numeric_limits<double>::max();
  c.v0 = 1e300;
  try {
    integrate(c, 0, 1.0, 100);
    CHECK(false);
  } catch (const NumericalFailure& e) {
    CHECK(e.step() >= 1);
    CHECK(e.step() <= 100);
  }
}

}
