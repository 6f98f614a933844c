#include "plc/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "plc/errors.hpp"

namespace plc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view key, std::string_view value) {
  if (value == "inf") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const std::string text(value);
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError(std::string(key) + ": expected a number, got '" + std::string(value) + "'");
}

std::uint64_t parse_u64(std::string_view key, std::string_view value) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ValidationError(std::string(key) + ": expected a non-negative integer, got '" +
                          std::string(value) + "'");
  }
  return v;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ValidationError(std::string(key) + ": expected true or false, got '" +
                        std::string(value) + "'");
}

std::vector<SchemeId> parse_schemes(std::string_view key, std::string_view value) {
  std::vector<SchemeId> out;
  std::size_t begin = 0;
  while (begin <= value.size()) {
    const std::size_t comma = value.find(',', begin);
    const std::size_t len = comma == std::string_view::npos ? std::string_view::npos : comma - begin;
    const std::string_view token = trim(value.substr(begin, len));
    if (!token.empty()) {
      try {
        out.push_back(SchemeId::parse(token));
      } catch (const ValidationError& e) {
        throw ValidationError(std::string(key) + ": " + e.what());
      }
    }
    if (comma == std::string_view::npos) break;
    begin = comma + 1;
  }
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_schemes(const std::vector<SchemeId>& schemes) {
  std::string out;
  for (const SchemeId& s : schemes) {
    if (!out.empty()) out += ",";
    out += s.label();
  }
  return out;
}

const char* variable_name(SweepSpec::Variable v) {
  switch (v) {
    case SweepSpec::Variable::kDistance:
      return "distance";
    case SweepSpec::Variable::kStaticPower:
      return "static_power";
    case SweepSpec::Variable::kOutageTarget:
      return "outage_target";
    case SweepSpec::Variable::kImpulseProbability:
      return "impulse_probability";
  }
  return "?";
}

SweepSpec::Variable parse_variable(std::string_view key, std::string_view value) {
  if (value == "distance") return SweepSpec::Variable::kDistance;
  if (value == "static_power") return SweepSpec::Variable::kStaticPower;
  if (value == "outage_target") return SweepSpec::Variable::kOutageTarget;
  if (value == "impulse_probability") return SweepSpec::Variable::kImpulseProbability;
  throw ValidationError(std::string(key) +
                        ": expected distance|static_power|outage_target|impulse_probability");
}

struct KeyEntry {
  const char* key;
  const char* description;
  std::function<std::string(const ScenarioConfig&)> get;
  std::function<void(ScenarioConfig&, std::string_view)> set;
};

const std::vector<KeyEntry>& key_table() {
  using C = ScenarioConfig;
  static const std::vector<KeyEntry> table = {
      {"attenuation.a0", "constant term of the attenuation factor (1/m)",
       [](const C& c) { return format_double(c.attenuation.a0); },
       [](C& c, std::string_view v) { c.attenuation.a0 = parse_double("attenuation.a0", v); }},
      {"attenuation.a1", "frequency-dependent attenuation coefficient (1/m per f^k)",
       [](const C& c) { return format_double(c.attenuation.a1); },
       [](C& c, std::string_view v) { c.attenuation.a1 = parse_double("attenuation.a1", v); }},
      {"attenuation.k", "frequency exponent of the attenuation factor",
       [](const C& c) { return format_double(c.attenuation.k); },
       [](C& c, std::string_view v) { c.attenuation.k = parse_double("attenuation.k", v); }},
      {"attenuation.f_mhz", "operating frequency in MHz",
       [](const C& c) { return format_double(c.attenuation.f_mhz); },
       [](C& c, std::string_view v) { c.attenuation.f_mhz = parse_double("attenuation.f_mhz", v); }},
      {"attenuation.freq_unit", "unit entering a1*f^k: mhz or hz",
       [](const C& c) {
         return c.attenuation.freq_unit == FrequencyUnit::kMegahertz ? "mhz" : "hz";
       },
       [](C& c, std::string_view v) {
         if (v == "mhz") {
           c.attenuation.freq_unit = FrequencyUnit::kMegahertz;
         } else if (v == "hz") {
           c.attenuation.freq_unit = FrequencyUnit::kHertz;
         } else {
           throw ValidationError("attenuation.freq_unit: expected mhz or hz");
         }
       }},
      {"noise.p", "impulsive-noise occurrence probability",
       [](const C& c) { return format_double(c.noise.impulse_prob); },
       [](C& c, std::string_view v) { c.noise.impulse_prob = parse_double("noise.p", v); }},
      {"noise.sbnr_db", "signal-to-background-noise ratio (dB)",
       [](const C& c) { return format_double(c.noise.sbnr_db); },
       [](C& c, std::string_view v) { c.noise.sbnr_db = parse_double("noise.sbnr_db", v); }},
      {"noise.sinr_db", "signal-to-impulsive-noise ratio (dB); inf disables impulses",
       [](const C& c) { return format_double(c.noise.sinr_db); },
       [](C& c, std::string_view v) { c.noise.sinr_db = parse_double("noise.sinr_db", v); }},
      {"fading.mean_db", "mean of 10*log10(channel gain) (dB)",
       [](const C& c) { return format_double(c.fading.mean_db); },
       [](C& c, std::string_view v) { c.fading.mean_db = parse_double("fading.mean_db", v); }},
      {"fading.sigma_db", "standard deviation of 10*log10(channel gain) (dB)",
       [](const C& c) { return format_double(c.fading.sigma_db); },
       [](C& c, std::string_view v) { c.fading.sigma_db = parse_double("fading.sigma_db", v); }},
      {"modem.tx_static_w", "transmitter static power (W)",
       [](const C& c) { return format_double(c.modem.tx_static_w); },
       [](C& c, std::string_view v) { c.modem.tx_static_w = parse_double("modem.tx_static_w", v); }},
      {"modem.rx_static_w", "receiver static power (W)",
       [](const C& c) { return format_double(c.modem.rx_static_w); },
       [](C& c, std::string_view v) { c.modem.rx_static_w = parse_double("modem.rx_static_w", v); }},
      {"modem.bandwidth_hz", "system bandwidth (Hz)",
       [](const C& c) { return format_double(c.modem.bandwidth_hz); },
       [](C& c, std::string_view v) { c.modem.bandwidth_hz = parse_double("modem.bandwidth_hz", v); }},
      {"modem.xi", "spectral efficiency (bits/s/Hz)",
       [](const C& c) { return format_double(c.modem.spectral_efficiency); },
       [](C& c, std::string_view v) {
         c.modem.spectral_efficiency = parse_double("modem.xi", v);
       }},
      {"scenario.distance_m", "source-to-destination distance (m)",
       [](const C& c) { return format_double(c.distance_m); },
       [](C& c, std::string_view v) { c.distance_m = parse_double("scenario.distance_m", v); }},
      {"scenario.power_w", "fixed transmit power for outage evaluations (W)",
       [](const C& c) { return format_double(c.power_w); },
       [](C& c, std::string_view v) { c.power_w = parse_double("scenario.power_w", v); }},
      {"scenario.outage_target", "target outage probability for the power solvers",
       [](const C& c) { return format_double(c.outage_target); },
       [](C& c, std::string_view v) {
         c.outage_target = parse_double("scenario.outage_target", v);
       }},
      {"scenario.schemes", "comma list of single-hop, multi-hop(N), idf",
       [](const C& c) { return format_schemes(c.schemes); },
       [](C& c, std::string_view v) { c.schemes = parse_schemes("scenario.schemes", v); }},
      {"solver.tolerance", "outage residual tolerance of the bisection solvers",
       [](const C& c) { return format_double(c.solver.tolerance); },
       [](C& c, std::string_view v) { c.solver.tolerance = parse_double("solver.tolerance", v); }},
      {"solver.max_iterations", "bisection iteration cap",
       [](const C& c) { return std::to_string(c.solver.max_iterations); },
       [](C& c, std::string_view v) {
         c.solver.max_iterations = static_cast<int>(parse_u64("solver.max_iterations", v));
       }},
      {"solver.max_expansions", "bracket expansion cap",
       [](const C& c) { return std::to_string(c.solver.max_expansions); },
       [](C& c, std::string_view v) {
         c.solver.max_expansions = static_cast<int>(parse_u64("solver.max_expansions", v));
       }},
      {"sweep.variable", "swept quantity: distance|static_power|outage_target|impulse_probability",
       [](const C& c) { return std::string(variable_name(c.sweep.variable)); },
       [](C& c, std::string_view v) { c.sweep.variable = parse_variable("sweep.variable", v); }},
      {"sweep.start", "first value of the sweep range",
       [](const C& c) { return format_double(c.sweep.start); },
       [](C& c, std::string_view v) { c.sweep.start = parse_double("sweep.start", v); }},
      {"sweep.stop", "last value of the sweep range",
       [](const C& c) { return format_double(c.sweep.stop); },
       [](C& c, std::string_view v) { c.sweep.stop = parse_double("sweep.stop", v); }},
      {"sweep.steps", "number of sweep points (>= 2)",
       [](const C& c) { return std::to_string(c.sweep.steps); },
       [](C& c, std::string_view v) {
         c.sweep.steps = static_cast<int>(parse_u64("sweep.steps", v));
       }},
      {"sweep.spacing", "point spacing: linear or log",
       [](const C& c) { return c.sweep.spacing == SweepSpec::Spacing::kLinear ? "linear" : "log"; },
       [](C& c, std::string_view v) {
         if (v == "linear") {
           c.sweep.spacing = SweepSpec::Spacing::kLinear;
         } else if (v == "log") {
           c.sweep.spacing = SweepSpec::Spacing::kLog;
         } else {
           throw ValidationError("sweep.spacing: expected linear or log");
         }
       }},
      {"sweep.mode", "outage (fixed power) or energy (solve power, report J/bit)",
       [](const C& c) { return c.sweep.mode == SweepSpec::Mode::kOutage ? "outage" : "energy"; },
       [](C& c, std::string_view v) {
         if (v == "outage") {
           c.sweep.mode = SweepSpec::Mode::kOutage;
         } else if (v == "energy") {
           c.sweep.mode = SweepSpec::Mode::kEnergy;
         } else {
           throw ValidationError("sweep.mode: expected outage or energy");
         }
       }},
      {"sweep.validate_mc", "append Monte Carlo estimate/CI columns and agreement flags",
       [](const C& c) { return c.sweep.validate_mc ? "true" : "false"; },
       [](C& c, std::string_view v) { c.sweep.validate_mc = parse_bool("sweep.validate_mc", v); }},
      {"sim.trials", "Monte Carlo trials per estimate",
       [](const C& c) { return std::to_string(c.sim.trials); },
       [](C& c, std::string_view v) { c.sim.trials = parse_u64("sim.trials", v); }},
      {"sim.seed", "Monte Carlo base seed",
       [](const C& c) { return std::to_string(c.sim.seed); },
       [](C& c, std::string_view v) { c.sim.seed = parse_u64("sim.seed", v); }},
      {"sim.workers", "Monte Carlo worker threads (estimates are identical for any count)",
       [](const C& c) { return std::to_string(c.sim.workers); },
       [](C& c, std::string_view v) {
         c.sim.workers = static_cast<unsigned>(parse_u64("sim.workers", v));
       }},
  };
  return table;
}

}  // namespace

void ScenarioConfig::validate() const {
  attenuation.validate();
  noise.validate();
  fading.validate();
  modem.validate();
  if (!(distance_m > 0.0)) throw ValidationError("scenario.distance_m must be > 0");
  if (!(power_w > 0.0)) throw ValidationError("scenario.power_w must be > 0");
  if (!(outage_target > 0.0 && outage_target < 1.0)) {
    throw ValidationError("scenario.outage_target must lie strictly inside (0, 1)");
  }
  if (schemes.empty()) throw ValidationError("scenario.schemes must name at least one scheme");
  if (!(solver.tolerance > 0.0)) throw ValidationError("solver.tolerance must be > 0");
  if (solver.max_iterations < 1) throw ValidationError("solver.max_iterations must be >= 1");
  if (solver.max_expansions < 1) throw ValidationError("solver.max_expansions must be >= 1");
  if (!(sweep.start < sweep.stop)) {
    throw ValidationError("sweep.start must be smaller than sweep.stop");
  }
  if (sweep.steps < 2) throw ValidationError("sweep.steps must be >= 2");
  if (sweep.spacing == SweepSpec::Spacing::kLog && !(sweep.start > 0.0)) {
    throw ValidationError("sweep.start must be > 0 for log spacing");
  }
  switch (sweep.variable) {
    case SweepSpec::Variable::kDistance:
    case SweepSpec::Variable::kStaticPower:
      if (!(sweep.start > 0.0)) throw ValidationError("sweep.start must be > 0 for this variable");
      break;
    case SweepSpec::Variable::kOutageTarget:
      if (!(sweep.start > 0.0 && sweep.stop < 1.0)) {
        throw ValidationError("sweep range for outage_target must lie inside (0, 1)");
      }
      if (sweep.mode != SweepSpec::Mode::kEnergy) {
        throw ValidationError("sweep.variable outage_target requires sweep.mode = energy");
      }
      break;
    case SweepSpec::Variable::kImpulseProbability:
      if (!(sweep.start >= 0.0 && sweep.stop <= 1.0)) {
        throw ValidationError("sweep range for impulse_probability must lie inside [0, 1]");
      }
      break;
  }
  sim.validate();
}

ScenarioConfig default_config() { return {}; }

void set_key(ScenarioConfig& cfg, std::string_view key, std::string_view value) {
  for (const KeyEntry& entry : key_table()) {
    if (key == entry.key) {
      entry.set(cfg, value);
      return;
    }
  }
  throw ValidationError("unknown key '" + std::string(key) + "' (see the schema subcommand)");
}

void load_config_file(ScenarioConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view text = line;
    if (const std::size_t hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    const std::size_t eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    try {
      set_key(cfg, trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
    } catch (const ValidationError& e) {
      throw ValidationError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void apply_override(ScenarioConfig& cfg, std::string_view assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ValidationError("override '" + std::string(assignment) + "' must have the form key=value");
  }
  set_key(cfg, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

std::string schema_text() {
  const ScenarioConfig defaults;
  std::ostringstream out;
  out << "# configuration keys (key = default  -- description)\n";
  for (const KeyEntry& entry : key_table()) {
    out << entry.key << " = " << entry.get(defaults) << "  # " << entry.description << "\n";
  }
  return out.str();
}

}  // namespace plc
