#pragma once

namespace plc {

// Two-term noise model: Gaussian background plus Bernoulli-gated Gaussian
// impulses. Both ratios are referenced to unit signal power, so the variances
// follow directly from the configured dB values. sinr_db = +inf encodes the
// impulse-free case (impulse variance exactly 0).
struct NoiseParams {
  double impulse_prob = 0.01;  // probability an impulse is present
  double sbnr_db = 25.0;       // signal-to-background-noise ratio
  double sinr_db = -15.0;      // signal-to-impulsive-noise ratio

  double background_var() const;    // 10^(-sbnr_db/10)
  double impulse_var() const;       // 10^(-sinr_db/10)
  double impulsive_penalty() const; // 1 + impulse_var/background_var, >= 1
  void validate() const;
};

/// SNR the received signal must exceed under the high-SNR outage criterion:
/// impulsive_penalty^impulse_prob * 2^spectral_efficiency.
double noise_threshold(const NoiseParams& noise, double spectral_efficiency);

}  // namespace plc
