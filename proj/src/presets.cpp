#include "plc/presets.hpp"

#include <string>

#include "plc/errors.hpp"

namespace plc {

namespace {

std::vector<SchemeId> all_schemes() {
  return {SchemeId::single_hop(), SchemeId::multi_hop(2), SchemeId::multi_hop(3),
          SchemeId::multi_hop(4), SchemeId::idf()};
}

}  // namespace

std::vector<std::string_view> preset_names() { return {"fig2", "fig3", "fig4", "fig5", "fig6"}; }

void apply_preset(ScenarioConfig& cfg, std::string_view name) {
  SweepSpec& sweep = cfg.sweep;
  if (name == "fig2") {
    // Outage vs distance, direct transmission against 2..4-hop chains.
    sweep = {SweepSpec::Variable::kDistance, 100.0, 1200.0, 23,
             SweepSpec::Spacing::kLinear, SweepSpec::Mode::kOutage, false};
    cfg.schemes = {SchemeId::single_hop(), SchemeId::multi_hop(2), SchemeId::multi_hop(3),
                   SchemeId::multi_hop(4)};
    cfg.power_w = 1.0;
  } else if (name == "fig3") {
    // Outage vs distance, dual-hop chain against incremental relaying; vary
    // noise.p via --set to reproduce the impulse-probability families.
    sweep = {SweepSpec::Variable::kDistance, 100.0, 1200.0, 23,
             SweepSpec::Spacing::kLinear, SweepSpec::Mode::kOutage, false};
    cfg.schemes = {SchemeId::multi_hop(2), SchemeId::idf()};
    cfg.power_w = 1.0;
  } else if (name == "fig4") {
    // Energy per bit vs distance at the default outage target.
    sweep = {SweepSpec::Variable::kDistance, 100.0, 1200.0, 23,
             SweepSpec::Spacing::kLinear, SweepSpec::Mode::kEnergy, false};
    cfg.schemes = all_schemes();
  } else if (name == "fig5") {
    // Energy per bit vs per-modem static power at a short distance. The range
    // reaches low enough to expose the single-hop/IDF crossover.
    sweep = {SweepSpec::Variable::kStaticPower, 1e-3, 2.0, 41,
             SweepSpec::Spacing::kLog, SweepSpec::Mode::kEnergy, false};
    cfg.schemes = all_schemes();
    cfg.distance_m = 100.0;
  } else if (name == "fig6") {
    // Energy per bit vs outage target at a short distance.
    sweep = {SweepSpec::Variable::kOutageTarget, 1e-4, 1e-1, 13,
             SweepSpec::Spacing::kLog, SweepSpec::Mode::kEnergy, false};
    cfg.schemes = all_schemes();
    cfg.distance_m = 100.0;
  } else {
    std::string names;
    for (std::string_view n : preset_names()) {
      if (!names.empty()) names += ", ";
      names += n;
    }
    throw ValidationError("unknown preset '" + std::string(name) + "' (available: " + names + ")");
  }
}

}  // namespace plc
