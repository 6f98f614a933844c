#pragma once

#include <cstdint>

#include "plc/outage.hpp"

namespace plc {

// Trial budget and reproducibility knobs. Per-trial randomness is derived
// from (seed, trial index) alone, so the estimate is bit-identical for any
// worker count.
struct SimConfig {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;

  void validate() const;
};

struct SimEstimate {
  double p_hat = 0.0;
  double ci99_half_width = 0.0;  // normal-approximation binomial interval
  std::uint64_t trials = 0;
};

// The simulator scores each trial with the exact noise-state-averaged
// capacity (1-p) log2(1+g) + p log2(1+g/penalty) < spectral_efficiency,
// not the high-SNR threshold form, which keeps it an independent check on
// the analytic expressions. Only the fading is sampled; the expectation over
// noise states sits inside the criterion.

SimEstimate simulate_link_outage(double power_w, const LinkSpec& link,
                                 const NoiseParams& noise, const AttenuationParams& att,
                                 double spectral_efficiency, const SimConfig& cfg);

/// Chain outage: the trial fails when any hop's capacity falls short. Accepts
/// one-hop topologies, where it reproduces simulate_link_outage exactly.
SimEstimate simulate_multihop_outage(double power_w, const Topology& topology,
                                     const NoiseParams& noise, const AttenuationParams& att,
                                     double spectral_efficiency, const SimConfig& cfg);

/// Incremental DF: outage requires the direct path to fail and the relayed
/// path (either hop) to fail as well. Draw order per trial: direct, hop 1,
/// hop 2.
SimEstimate simulate_idf_outage(double power_w, const Topology& topology,
                                const NoiseParams& noise, const AttenuationParams& att,
                                double spectral_efficiency, const SimConfig& cfg);

/// Band for judging analytic-vs-simulated agreement: three 99% half-widths
/// (evaluated at whichever of the estimate or the analytic value gives the
/// wider interval, so a zero-count estimate still carries its sampling
/// noise), widened to 10% relative once the analytic value reaches 1e-4.
double mc_agreement_tolerance(double analytic, const SimEstimate& estimate);
bool mc_agrees(double analytic, const SimEstimate& estimate);

}  // namespace plc
