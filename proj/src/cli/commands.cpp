#include "inerton/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "inerton/analytic.hpp"
#include "inerton/cli/config_io.hpp"
#include "inerton/cli/formats.hpp"
#include "inerton/cli/verify.hpp"
#include "inerton/integrator.hpp"
#include "inerton/observables.hpp"

namespace inerton::cli {

namespace {

namespace fs = std::filesystem;

/// Bad request that is not an I/O problem: unknown scenario, missing source.
class RequestError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config_path;
  std::string scenario_name;
  std::string out_dir;
  int l = 0;
  std::optional<int> n_max;
  int samples = 200;
};

struct Resolved {
  SimulationConfig config;
  std::vector<std::string> defaulted;
  std::string source;  ///< "scenario:<name>" or the config path
  bool is_electron = false;
};

Resolved resolve(const Options& opt) {
  Resolved r;
  if (!opt.config_path.empty() && !opt.scenario_name.empty()) {
    throw RequestError("give either --config or --scenario, not both");
  }
  if (!opt.scenario_name.empty()) {
    const auto found = scenario(opt.scenario_name);
    if (!found) {
      std::string names;
      for (const auto& n : scenario_names()) names += (names.empty() ? "" : ", ") + n;
      throw RequestError("unknown scenario '" + opt.scenario_name +
                         "'; available scenarios: " + names);
    }
    r.config = *found;
    r.source = "scenario:" + opt.scenario_name;
    r.is_electron = opt.scenario_name == "electron";
  } else if (!opt.config_path.empty()) {
    LoadedConfig loaded = load_config(opt.config_path);
    r.config = loaded.config;
    r.defaulted = std::move(loaded.defaulted);
    r.source = opt.config_path;
  } else {
    throw RequestError("no configuration: pass --config PATH or --scenario NAME");
  }
  validate(r.config);
  return r;
}

void add_config(KeyValueDoc& doc, const SimulationConfig& c) {
  doc.add("config.M_g", c.M);
  doc.add("config.v0_cm_per_s", c.v0);
  doc.add("config.c_cm_per_s", c.c);
  doc.add("config.T_s", c.T);
  doc.add("config.N", c.N);
  doc.add("config.R0_cm", c.R0);
  doc.add("config.h_erg_s", c.h);
  doc.add("config.steps_per_period", c.steps_per_period);
  doc.add("config.n_oscillations", c.n_oscillations);
}

/// Collects emitted files and writes them plus manifest.txt.
class Emitter {
 public:
  explicit Emitter(std::string dir) : dir_(std::move(dir)) {}

  void add(std::string name, std::string content) {
    files_.emplace_back(std::move(name), std::move(content));
  }

  /// Writes every file and a manifest listing their digests.
  void flush(KeyValueDoc manifest) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create output directory '" + dir_ + "': " + ec.message());
    for (const auto& [name, content] : files_) {
      write(name, content);
      manifest.add("file." + name + ".sha256", sha256_hex(content));
      manifest.add("file." + name + ".bytes", static_cast<long long>(content.size()));
    }
    write("manifest.txt", manifest.str());
  }

 private:
  void write(const std::string& name, const std::string& content) const {
    const fs::path path = fs::path(dir_) / name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw IoError("write to '" + path.string() + "' failed");
  }

  std::string dir_;
  std::vector<std::pair<std::string, std::string>> files_;
};

KeyValueDoc manifest_header(const std::string& command, const Resolved& r) {
  KeyValueDoc m;
  m.comment("inerton run manifest");
  m.add("tool", std::string_view("inerton"));
  m.add("tool_version", std::string_view(kToolVersion));
  m.add("command", command);
  m.add("source", r.source);
  add_config(m, r.config);
  return m;
}

int cmd_simulate(const Options& opt, std::ostream& out) {
  const Resolved r = resolve(opt);
  const int n_max = opt.n_max.value_or(r.config.n_oscillations);
  const auto analytic_series = analytic::trajectory_series(r.config, opt.l, n_max, opt.samples);
  const auto integrated = integrator::integrate(
      r.config, opt.l, analytic_series.event.T_l,
      static_cast<std::size_t>(r.config.steps_per_period));

  Emitter emit(opt.out_dir.empty() ? "." : opt.out_dir);
  emit.add("trajectory_analytic.csv", write_series_csv(analytic_series));
  emit.add("trajectory_integrated.csv", write_series_csv(integrated));
  KeyValueDoc manifest = manifest_header("simulate", r);
  manifest.add("l", opt.l);
  manifest.add("n_max", n_max);
  manifest.add("samples", opt.samples);
  emit.flush(manifest);

  out << "simulate: l=" << opt.l << " n_max=" << n_max << " samples=" << opt.samples
      << " -> " << (opt.out_dir.empty() ? "." : opt.out_dir) << "\n";
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const Resolved r = resolve(opt);
  const auto results = run_checks(r.config);
  const std::string report = format_report(results);
  out << report;
  if (!opt.out_dir.empty()) {
    Emitter emit(opt.out_dir);
    emit.add("verify_report.txt", report);
    emit.flush(manifest_header("verify", r));
  }
  return all_passed(results) ? kExitOk : kExitValidation;
}

struct PublishedValue {
  const char* key;
  double published;
  double computed;
};

std::string observables_report(const Resolved& r) {
  const auto rep = observables::make_report(r.config);
  KeyValueDoc doc;
  doc.comment("inerton observables report");
  doc.add("source", r.source);
  add_config(doc, r.config);
  const bool r0_defaulted =
      std::find(r.defaulted.begin(), r.defaulted.end(), "R0_cm") != r.defaulted.end();
  doc.add("R0_defaulted", r0_defaulted);
  doc.add("lambda_cm", rep.lambda);
  doc.add("lambda_mech_cm", rep.lambda_mech);
  doc.add("Lambda_cm", rep.Lambda);
  doc.add("ratio_c_over_v0", rep.ratio_c_over_v0);
  doc.add("N_estimate", rep.N_estimate);
  doc.add("m0_g", rep.m0);
  doc.add("E_erg", rep.E);
  doc.add("nu_per_s", rep.nu);
  doc.add("p0_g_cm_per_s", rep.p0);
  doc.add("J_erg_s", rep.J);
  doc.add("J_over_h", rep.J_over_h);
  doc.add("action_calibrated", std::abs(rep.J_over_h - 1.0) <= 1e-12);

  if (r.is_electron) {
    // Published estimates for a free electron at 1e5 cm/s. A value is flagged
    // when it differs from ours by more than a factor of 2.
    const PublishedValue published[] = {
        {"lambda_cm", 6e-5, rep.lambda},
        {"Lambda_cm", 2.0, rep.Lambda},
        {"N_estimate", 1e22, rep.N_estimate},
    };
    for (const auto& p : published) {
      const double factor = p.computed / p.published;
      const std::string key = p.key;
      doc.add("published." + key, p.published);
      doc.add("published." + key + ".ratio", factor);
      doc.add("published." + key + ".discrepancy", factor > 2.0 || factor < 0.5);
      doc.add("published." + key + ".within_factor_100", factor <= 100.0 && factor >= 0.01);
    }
  }
  return doc.str();
}

int cmd_observables(const Options& opt, std::ostream& out) {
  const Resolved r = resolve(opt);
  const std::string report = observables_report(r);
  out << report;
  if (!opt.out_dir.empty()) {
    Emitter emit(opt.out_dir);
    emit.add("observables.txt", report);
    emit.flush(manifest_header("observables", r));
  }
  return kExitOk;
}

int cmd_figure5(const Options& opt, std::ostream& out) {
  const Resolved r = resolve(opt);
  const int n_max = opt.n_max.value_or(4);
  const auto series = analytic::trajectory_series(r.config, opt.l, n_max, opt.samples);
  const EmissionEvent& ev = series.event;

  std::string csv = "pi_t_over_T,pi_X_over_lambda,slope\n";
  std::vector<std::pair<double, double>> points;
  points.reserve(series.samples.size());
  for (const auto& s : series.samples) {
    const double x = std::numbers::pi * s.t_l / ev.T_l;
    const double y = std::numbers::pi * s.X / ev.lambda_l;
    const double slope = s.Xdot / ev.v0l;
    csv += format_number(x) + "," + format_number(y) + "," + format_number(slope) + "\n";
    points.emplace_back(x, y);
  }
  PlotOptions plot;
  plot.title = "Particle staircase, l=" + std::to_string(opt.l) + ", " +
               std::to_string(n_max) + " oscillations";
  plot.x_label = "pi t / T_l";
  plot.y_label = "pi X / lambda_l";

  Emitter emit(opt.out_dir.empty() ? "." : opt.out_dir);
  emit.add("figure5.csv", csv);
  emit.add("figure5.svg", render_svg_line_plot(points, plot));
  KeyValueDoc manifest = manifest_header("figure5", r);
  manifest.add("l", opt.l);
  manifest.add("n_max", n_max);
  manifest.add("samples", opt.samples);
  emit.flush(manifest);
  out << "figure5: " << series.samples.size() << " points -> "
      << (opt.out_dir.empty() ? "." : opt.out_dir) << "\n";
  return kExitOk;
}

void add_source_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config_path, "Config file (key = value)");
  cmd->add_option("--scenario", opt.scenario_name, "Built-in scenario (electron, unit)");
  cmd->add_option("--out", opt.out_dir, "Output directory");
}

void add_trajectory_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--l", opt.l, "Emission slot index in [0, N-1]");
  cmd->add_option_function<int>(
      "--n-max", [&opt](const int& v) { opt.n_max = v; }, "Number of oscillations");
  cmd->add_option("--samples", opt.samples, "Samples per oscillation");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Particle/inerton dynamics: trajectories, verification and observables",
               "inerton"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Options opt;
  auto* simulate = app.add_subcommand("simulate", "Emit analytic and integrated trajectories");
  add_source_options(simulate, opt);
  add_trajectory_options(simulate, opt);
  auto* verify = app.add_subcommand("verify", "Run the self-consistency checks");
  add_source_options(verify, opt);
  auto* observables_cmd = app.add_subcommand("observables", "Report derived observables");
  add_source_options(observables_cmd, opt);
  auto* figure = app.add_subcommand("figure5", "Emit the dimensionless staircase curve");
  add_source_options(figure, opt);
  add_trajectory_options(figure, opt);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitIo;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (observables_cmd->parsed()) return cmd_observables(opt, out);
    if (figure->parsed()) return cmd_figure5(opt, out);
  } catch (const ConfigParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace inerton::cli
