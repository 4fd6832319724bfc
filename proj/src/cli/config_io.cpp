#include "inerton/cli/config_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "inerton/cli/formats.hpp"

namespace inerton::cli {

namespace {

enum class Kind { real, integer };

struct KeySpec {
  std::string_view name;
  Kind kind;
  bool required;
};

constexpr KeySpec kKeys[] = {
    {"M_g", Kind::real, true},
    {"v0_cm_per_s", Kind::real, true},
    {"c_cm_per_s", Kind::real, true},
    {"T_s", Kind::real, true},
    {"N", Kind::integer, true},
    {"R0_cm", Kind::real, false},
    {"h_erg_s", Kind::real, false},
    {"steps_per_period", Kind::integer, false},
    {"n_oscillations", Kind::integer, false},
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

const KeySpec* find_key(std::string_view name) {
  for (const auto& k : kKeys) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

void assign(SimulationConfig& c, std::string_view key, double real, int integer) {
  if (key == "M_g") c.M = real;
  else if (key == "v0_cm_per_s") c.v0 = real;
  else if (key == "c_cm_per_s") c.c = real;
  else if (key == "T_s") c.T = real;
  else if (key == "N") c.N = integer;
  else if (key == "R0_cm") c.R0 = real;
  else if (key == "h_erg_s") c.h = real;
  else if (key == "steps_per_period") c.steps_per_period = integer;
  else if (key == "n_oscillations") c.n_oscillations = integer;
}

}  // namespace

bool LoadedConfig::was_defaulted(std::string_view key) const {
  return std::find(defaulted.begin(), defaulted.end(), key) != defaulted.end();
}

LoadedConfig parse_config(std::string_view text, const std::string& origin) {
  LoadedConfig out;
  std::map<std::string, std::size_t, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    auto error = [&](const std::string& msg) {
      return ConfigParseError(line_no, origin + ":" + std::to_string(line_no) + ": " + msg);
    };

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw error("expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const KeySpec* spec = find_key(key);
    if (spec == nullptr) throw error("unknown key '" + std::string(key) + "'");
    if (seen.count(key) != 0) {
      throw error("duplicate key '" + std::string(key) + "' (first set on line " +
                  std::to_string(seen.find(key)->second) + ")");
    }
    seen.emplace(std::string(key), line_no);

    if (spec->kind == Kind::integer) {
      int v = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) {
        throw error("'" + std::string(key) + "' expects an integer, got '" +
                    std::string(value) + "'");
      }
      assign(out.config, key, 0.0, v);
    } else {
      double v = 0.0;
      try {
        v = parse_number(value);
      } catch (const std::invalid_argument&) {
        throw error("'" + std::string(key) + "' expects a number, got '" +
                    std::string(value) + "'");
      }
      assign(out.config, key, v, 0);
    }
  }

  // Optional keys keep the SimulationConfig defaults.
  for (const auto& k : kKeys) {
    if (seen.count(k.name) != 0) continue;
    if (k.required) {
      throw ConfigParseError(0, origin + ": missing required key '" + std::string(k.name) + "'");
    }
    out.defaulted.emplace_back(k.name);
  }
  return out;
}

LoadedConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::ios_base::failure("cannot read config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

std::string format_config(const SimulationConfig& c) {
  KeyValueDoc doc;
  doc.add("M_g", c.M);
  doc.add("v0_cm_per_s", c.v0);
  doc.add("c_cm_per_s", c.c);
  doc.add("T_s", c.T);
  doc.add("N", c.N);
  doc.add("R0_cm", c.R0);
  doc.add("h_erg_s", c.h);
  doc.add("steps_per_period", c.steps_per_period);
  doc.add("n_oscillations", c.n_oscillations);
  return doc.str();
}

std::vector<std::string> scenario_names() { return {"electron", "unit"}; }

std::optional<SimulationConfig> scenario(std::string_view name) {
  if (name == "unit") {
    SimulationConfig c;
    c.M = 1.0;
    c.v0 = 1.0;
    c.c = 10.0;
    c.T = 1.0;
    c.N = 10;
    c.h = 1.0;  // J = E 2T = 1, so the unit scenario is action-calibrated
    return c;
  }
  if (name == "electron") {
    SimulationConfig c;
    c.M = constants::electron_mass;
    c.v0 = 1e5;
    c.c = constants::light_speed;
    c.h = constants::planck_h;
    c.T = c.h / (c.M * c.v0 * c.v0);
    c.N = 10;
    c.R0 = constants::superparticle_size;
    return c;
  }
  return std::nullopt;
}

}  // namespace inerton::cli
