#pragma once

#include "plc/rng.hpp"

namespace plc {

// Unit entering the a1 * f^k term of the attenuation factor. Cable
// attenuation constants are usually fitted with f in MHz; the selector keeps
// the alternative reading available.
enum class FrequencyUnit { kMegahertz, kHertz };

// Distance/frequency power attenuation exp(-alpha d), alpha = a0 + a1 f^k.
struct AttenuationParams {
  double a0 = 9.4e-3;   // 1/m
  double a1 = 4.2e-7;   // 1/m per f^k
  double k = 0.7;       // frequency exponent
  double f_mhz = 30.0;  // operating frequency, MHz
  FrequencyUnit freq_unit = FrequencyUnit::kMegahertz;

  double alpha() const;  // 1/m, finite and > 0 for valid params
  void validate() const;
};

// Mean and standard deviation, both in dB, of 10*log10(h) where h is the
// channel amplitude gain. The squared gain h^2 is then log-normal with dB
// parameters (2*mean_db, 2*sigma_db).
struct FadingParams {
  double mean_db = 3.0;
  double sigma_db = 1.4142135623730951;

  void validate() const;
};

// One hop of a relay chain (or the direct path).
struct LinkSpec {
  double distance_m = 0.0;
  FadingParams fading;

  void validate() const;
};

/// Power attenuation of a link of length distance_m; 1 at zero distance,
/// monotone non-increasing in distance.
double attenuation(const AttenuationParams& params, double distance_m);

/// CDF of the squared channel gain h^2 evaluated at x > 0.
double lognormal_sq_cdf(double x, const FadingParams& fading);

/// Draws one squared channel gain h^2: 10*log10(h) is normal with the
/// parameters of `fading`.
double sample_channel_gain_sq(const FadingParams& fading, RngStream& rng);

}  // namespace plc
