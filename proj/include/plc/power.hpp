#pragma once

#include "plc/outage.hpp"

namespace plc {

enum class SolveMethod { kClosedForm, kBisection };

struct PowerSolution {
  double power_w = 0.0;
  double residual = 0.0;      // |outage(power_w) - target|
  int iterations = 0;
  double bracket_low_w = 0.0;  // final bracket around the root
  double bracket_high_w = 0.0;
  SolveMethod method = SolveMethod::kClosedForm;
};

struct SolverOptions {
  double tolerance = 1e-10;  // on the outage residual
  int max_iterations = 400;
  int max_expansions = 200;  // bracket doublings/halvings before giving up
};

/// Closed-form minimum power meeting the target outage on one link.
/// Round trip through single_hop_outage holds to <= 1e-10.
PowerSolution solve_single_hop(double target_outage, const LinkSpec& link,
                               const NoiseParams& noise, const AttenuationParams& att,
                               double spectral_efficiency);

/// Bracketed bisection on the strictly decreasing map power -> chain outage.
/// The bracket grows geometrically from a closed-form seed until it straddles
/// the target, then bisection runs until the outage residual meets
/// opt.tolerance or the bracket width falls below 1e-12 of the power.
/// Accepts one-hop topologies so the reduction to the closed form stays
/// testable.
PowerSolution solve_multihop(double target_outage, const Topology& topology,
                             const NoiseParams& noise, const AttenuationParams& att,
                             double spectral_efficiency, const SolverOptions& opt = {});

/// Same bisection contract on the incremental-DF outage. The returned power
/// is additionally checked against the expanded erf identity.
PowerSolution solve_idf(double target_outage, const Topology& topology,
                        const NoiseParams& noise, const AttenuationParams& att,
                        double spectral_efficiency, const SolverOptions& opt = {});

}  // namespace plc
