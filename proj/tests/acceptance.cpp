// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "inerton/analytic.hpp"
#include "inerton/cli/commands.hpp"
#include "inerton/cli/config_io.hpp"
#include "inerton/cli/formats.hpp"
#include "inerton/integrator.hpp"
#include "inerton/observables.hpp"
#include "inerton/wavemech.hpp"

using namespace inerton;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

struct Verdict {
  bool pass;
  std::string detail;
};

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

std::string num(double v) { return cli::format_number(v); }

SimulationConfig unit() { return *cli::scenario("unit"); }
SimulationConfig electron() { return *cli::scenario("electron"); }

/// Random valid configs spanning several decades.
std::vector<SimulationConfig> random_configs(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> e(-1.0, 1.0), f(0.01, 0.99);
  std::vector<SimulationConfig> out;
  for (int i = 0; i < count; ++i) {
    SimulationConfig c;
    c.M = std::pow(10.0, 15 * e(rng));
    c.c = std::pow(10.0, 10 * e(rng));
    c.v0 = f(rng) * c.c;
    c.T = std::pow(10.0, 9 * e(rng));
    c.h = std::pow(10.0, 15 * e(rng));
    c.R0 = std::pow(10.0, 15 * e(rng));
    out.push_back(c);
  }
  return out;
}

double oracle_error(const SimulationConfig& c, std::size_t steps) {
  using namespace integrator;
  const auto ev = emission_schedule(c, 0);
  const auto exact = analytic::trajectory_series(c, 0, 1, static_cast<int>(steps));
  const auto numeric = integrate(c, 0, ev.T_l, steps);
  return compare_series(exact, numeric).max_rel_error_over({kX, kXdot, kPerp, kPerpDot});
}

std::map<std::string, std::string> key_values(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);) {
    const auto eq = line.find('=');
    if (line.empty() || line[0] == '#' || eq == std::string::npos) continue;
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

int invoke(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "inerton");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Verdict ac1() {
  const auto start = std::chrono::steady_clock::now();
  const double err = oracle_error(unit(), 10000);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {err <= 1e-7 && secs <= 1.0,
          "max_rel_error=" + num(err) + " (<= 1e-7) runtime_s=" + num(secs) + " (<= 1)"};
}

Verdict ac2() {
  const double e32 = oracle_error(unit(), 32);
  const double e64 = oracle_error(unit(), 64);
  const double e128 = oracle_error(unit(), 128);
  const double r1 = e32 / e64, r2 = e64 / e128;
  const bool ok = r1 >= 12 && r1 <= 20 && r2 >= 12 && r2 <= 20;
  return {ok, "ratios 32/64=" + num(r1) + " 64/128=" + num(r2) + " (in [12, 20])"};
}

Verdict ac3() {
  const auto c = unit();
  const auto ev = emission_schedule(c, 0);
  double drift = 0.0;
  for (const auto& s : integrator::integrate(c, 0, ev.T_l, 10000).samples) {
    drift = std::max(drift, std::abs(integrator::first_integral(ev, s) - ev.v0l) / ev.v0l);
  }
  return {drift <= 1e-9, "drift=" + num(drift) + " (<= 1e-9)"};
}

Verdict ac4() {
  const auto c = unit();
  const auto ev = emission_schedule(c, 0);
  const auto numeric = integrator::integrate(c, 0, ev.T_l, 10000);
  const auto& mid = numeric.samples[5000];
  const auto& end = numeric.samples.back();
  double worst = 0.0;
  // analytic and integrated, velocity relative to v0l
  worst = std::max(worst, std::abs(analytic::particle_velocity(ev, 0.0) - ev.v0l) / ev.v0l);
  worst = std::max(worst, std::abs(analytic::particle_velocity(ev, ev.T_l / 2)) / ev.v0l);
  worst = std::max(worst, std::abs(analytic::particle_velocity(ev, ev.T_l) - ev.v0l) / ev.v0l);
  worst = std::max(worst, std::abs(numeric.samples.front().Xdot - ev.v0l) / ev.v0l);
  worst = std::max(worst, std::abs(mid.Xdot) / ev.v0l);
  worst = std::max(worst, std::abs(end.Xdot - ev.v0l) / ev.v0l);
  const double peak = ev.Lambda_l / pi;
  const double peak_err = std::max(rel(analytic::inerton_perp_position(ev, ev.T_l / 2), peak),
                                   rel(mid.x_perp, peak));
  return {worst <= 1e-12 && peak_err <= 1e-9,
          "velocity_rel=" + num(worst) + " (<= 1e-12) perp_max_rel=" + num(peak_err) +
              " (<= 1e-9)"};
}

Verdict ac5() {
  double worst = 0.0;
  for (const auto& c : random_configs(50, 5)) {
    worst = std::max(worst, rel(observables::cloud_amplitude(c) /
                                    observables::de_broglie_wavelength(c),
                                c.c / c.v0));
  }
  std::string text;
  const int code = invoke({"observables", "--scenario", "electron"}, &text);
  auto kv = key_values(text);
  const double lambda = cli::parse_number(kv["lambda_cm"]);
  const double Lambda = cli::parse_number(kv["Lambda_cm"]);
  const bool order = std::abs(std::log10(lambda / 6e-5)) <= 2 &&
                     std::abs(std::log10(Lambda / 2.0)) <= 2;
  const bool flag = kv["published.Lambda_cm.discrepancy"] == "true";
  const bool values = rel(lambda, 7.27e-5) <= 1e-3 && rel(Lambda, 21.8) <= 1e-3;
  return {code == 0 && worst <= 1e-12 && order && flag && values,
          "ratio_rel=" + num(worst) + " (<= 1e-12) lambda_cm=" + kv["lambda_cm"] +
              " Lambda_cm=" + kv["Lambda_cm"] + " Lambda_discrepancy=" +
              kv["published.Lambda_cm.discrepancy"]};
}

Verdict ac6() {
  std::string text;
  const int code = invoke({"observables", "--scenario", "electron"}, &text);
  auto kv = key_values(text);
  const double n = cli::parse_number(kv["N_estimate"]);
  const bool ok = code == 0 && std::abs(std::log10(n / 1e22)) <= 2 && rel(n, 7.3e23) <= 0.01;
  return {ok, "N_estimate=" + kv["N_estimate"] + " (within factor 100 of 1e22)"};
}

Verdict ac7() {
  double worst = 0.0, loop = 0.0;
  auto configs = random_configs(50, 7);
  configs.push_back(electron());
  for (auto c : configs) {
    c = observables::calibrate_action(c);
    const auto q = observables::quantum_relations(c);
    worst = std::max(worst, rel(observables::action_increment(c), c.h));
    worst = std::max(worst, rel(q.E, c.h * q.nu));
    worst = std::max(worst, rel(q.p0, c.h / observables::mechanical_wavelength(c)));
    const auto osc = wavemech::make_oscillator(c);
    loop = std::max(loop, rel(wavemech::action_loop_quadrature(osc), q.E * 2 * c.T));
  }
  return {worst <= 1e-12 && loop <= 1e-9,
          "identities_rel=" + num(worst) + " (<= 1e-12) loop_rel=" + num(loop) + " (<= 1e-9)"};
}

Verdict ac8() {
  const auto c = observables::calibrate_action(electron());
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  const double lambda = observables::de_broglie_wavelength(c);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double X = u(rng) * lambda, t = u(rng) * c.T;
    const double a = wavemech::particle_action(X, t, c);
    const double b = wavemech::wave_action(X, t, c);
    const auto q = observables::quantum_relations(c);
    worst = std::max(worst, std::abs(a - b) / (std::abs(q.p0 * X) + std::abs(q.E * t)));
  }
  return {worst <= 1e-12, "max_rel=" + num(worst) + " (<= 1e-12) over 100 points"};
}

Verdict ac9() {
  double worst = 0.0, detuned_min = INFINITY;
  auto configs = random_configs(20, 9);
  configs.push_back(electron());
  configs.push_back(unit());
  for (const auto& c : configs) {
    worst = std::max(worst, wavemech::wave_equation_residual(0.3, 0.7, c));
    auto w = wavemech::de_broglie_wave(c);
    w.frequency *= 1.1;
    detuned_min = std::min(detuned_min, wavemech::wave_equation_residual(0.3, 0.7, w, c.v0));
  }
  return {worst <= 1e-12 && detuned_min > 0.2,
          "residual=" + num(worst) + " (<= 1e-12) detuned_min=" + num(detuned_min) + " (> 0.2)"};
}

Verdict ac10() {
  double worst = 0.0, amp = 0.0;
  for (const auto& c : {unit(), electron()}) {
    const auto osc = wavemech::make_oscillator(c);
    for (int k = -90; k <= 90; ++k) {
      const double X = 0.9 * osc.amplitude * k / 90.0;
      worst = std::max(worst, std::abs(wavemech::hj_residual(X, osc)) / osc.E);
    }
    amp = std::max(amp, rel(osc.amplitude, observables::mechanical_wavelength(c) / pi));
  }
  return {worst <= 1e-6 && amp <= 1e-12,
          "hj_over_E=" + num(worst) + " (<= 1e-6) amplitude_rel=" + num(amp) + " (<= 1e-12)"};
}

Verdict ac11() {
  const fs::path root = fs::temp_directory_path() /
                        ("inerton_acceptance_" + std::to_string(std::random_device{}()));
  bool ok = true;
  int files = 0;
  for (const char* cmd : {"simulate", "figure5", "observables", "verify"}) {
    for (const char* run : {"a", "b"}) {
      const int code = invoke({cmd, "--scenario", "electron", "--out",
                               (root / (std::string(cmd) + run)).string()});
      ok = ok && code == 0;
    }
    for (const auto& entry : fs::directory_iterator(root / (std::string(cmd) + "a"))) {
      const auto twin = root / (std::string(cmd) + "b") / entry.path().filename();
      ok = ok && cli::sha256_hex(slurp(entry.path())) == cli::sha256_hex(slurp(twin));
      ++files;
    }
  }
  std::error_code ec;
  fs::remove_all(root, ec);
  return {ok && files > 0, "compared " + std::to_string(files) + " files across two runs"};
}

Verdict ac12() {
  bool ok = true;
  std::string detail;
  for (const char* name : {"unit", "electron"}) {
    std::string text;
    const int code = invoke({"verify", "--scenario", name}, &text);
    auto kv = key_values(text);
    const std::string p = "check.period_advance_consistency.";
    const auto ev = emission_schedule(*cli::scenario(name), 0);
    const double scale = ev.v0l * ev.T_l;
    const bool present = kv.count(p + "closed_form_cm") && kv.count(p + "drift_form_cm");
    ok = ok && code == 0 && kv[p + "status"] == "info" && present &&
         rel(cli::parse_number(kv[p + "closed_form_cm"]), (1 - 2 / pi) * scale) <= 1e-12 &&
         rel(cli::parse_number(kv[p + "drift_form_cm"]), 1.5 * pi * scale) <= 1e-12;
    if (detail.empty()) {
      detail = "status=" + kv[p + "status"] + " closed_form_cm=" + kv[p + "closed_form_cm"] +
               " drift_form_cm=" + kv[p + "drift_form_cm"];
    }
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"AC1 oracle equivalence", ac1},
      {"AC2 convergence order", ac2},
      {"AC3 first integral", ac3},
      {"AC4 velocity periodicity", ac4},
      {"AC5 amplitude ratio and electron scales", ac5},
      {"AC6 cloud population", ac6},
      {"AC7 action calibration", ac7},
      {"AC8 action identity", ac8},
      {"AC9 wave equation residual", ac9},
      {"AC10 Hamilton-Jacobi residual", ac10},
      {"AC11 determinism", ac11},
      {"AC12 consistency report", ac12},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
    failed += v.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
