#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "plc/config.hpp"

namespace plc {

struct SweepSummary {
  std::size_t points = 0;
  std::size_t rows = 0;
  std::size_t mc_flagged = 0;  // rows where analytic and Monte Carlo disagree

  std::string to_string() const;
};

/// Runs the configured sweep and writes CSV to `out`: '#'-prefixed header
/// comments (tool version, parameters, seed), one header row, then one data
/// row per (point, scheme) in deterministic order. Floats are printed with
/// 12 significant digits, so identical configurations produce byte-identical
/// output.
SweepSummary run_sweep(const ScenarioConfig& cfg, std::ostream& out);

}  // namespace plc
