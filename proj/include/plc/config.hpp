#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "plc/channel.hpp"
#include "plc/energy.hpp"
#include "plc/montecarlo.hpp"
#include "plc/noise.hpp"
#include "plc/power.hpp"
#include "plc/scheme.hpp"

namespace plc {

// Axis and evaluation mode of one sweep. Outage mode evaluates the analytic
// outage at the fixed scenario power; energy mode solves the minimum power
// for the target outage first and reports the resulting energy per bit.
struct SweepSpec {
  enum class Variable { kDistance, kStaticPower, kOutageTarget, kImpulseProbability };
  enum class Mode { kOutage, kEnergy };
  enum class Spacing { kLinear, kLog };

  Variable variable = Variable::kDistance;
  double start = 100.0;
  double stop = 1200.0;
  int steps = 23;
  Spacing spacing = Spacing::kLinear;
  Mode mode = Mode::kOutage;
  bool validate_mc = false;  // append Monte Carlo columns and agreement flags
};

// Everything one invocation needs: physical parameters, the evaluation
// scenario, and the sweep/simulation settings. Field defaults double as the
// tool defaults printed by the schema dump.
struct ScenarioConfig {
  AttenuationParams attenuation;
  NoiseParams noise;
  FadingParams fading;
  ModemPowerProfile modem;

  double distance_m = 400.0;     // source-to-destination distance
  double power_w = 1.0;          // fixed transmit power for outage evaluations
  double outage_target = 1e-2;   // target for the power solvers
  std::vector<SchemeId> schemes = {SchemeId::single_hop()};

  SolverOptions solver;
  SweepSpec sweep;
  SimConfig sim;

  void validate() const;  // throws ValidationError naming the offending field
};

ScenarioConfig default_config();

/// Applies `key = value` for one dotted key; throws ValidationError naming
/// the key on unknown keys or unparsable values.
void set_key(ScenarioConfig& cfg, std::string_view key, std::string_view value);

/// Loads a UTF-8 key-value file ('#' comments, one `key = value` per line).
/// Errors carry the file name and line number.
void load_config_file(ScenarioConfig& cfg, const std::string& path);

/// Applies one "key=value" override (the --set form).
void apply_override(ScenarioConfig& cfg, std::string_view assignment);

/// All known keys with their defaults and one-line descriptions.
std::string schema_text();

}  // namespace plc
