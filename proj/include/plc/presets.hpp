#pragma once

#include <string_view>
#include <vector>

#include "plc/config.hpp"

namespace plc {

/// Names of the bundled sweep presets (fig2..fig6).
std::vector<std::string_view> preset_names();

/// Overwrites the sweep-related fields of `cfg` with the named preset.
/// Throws ValidationError on unknown names.
void apply_preset(ScenarioConfig& cfg, std::string_view name);

}  // namespace plc
