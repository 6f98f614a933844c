#include "plc/channel.hpp"

#include <cmath>

#include "plc/errors.hpp"
#include "plc/special.hpp"
#include "plc/units.hpp"

namespace plc {

double AttenuationParams::alpha() const {
  const double f = freq_unit == FrequencyUnit::kMegahertz ? f_mhz : f_mhz * 1e6;
  return a0 + a1 * std::pow(f, k);
}

void AttenuationParams::validate() const {
  if (!(a0 >= 0.0)) throw ValidationError("attenuation.a0 must be >= 0");
  if (!(a1 >= 0.0)) throw ValidationError("attenuation.a1 must be >= 0");
  if (!(f_mhz > 0.0)) throw ValidationError("attenuation.f_mhz must be > 0");
  if (!(k > 0.0)) throw ValidationError("attenuation.k must be > 0");
  const double a = alpha();
  if (!std::isfinite(a) || !(a > 0.0)) {
    throw ValidationError("attenuation: alpha = a0 + a1*f^k must be finite and > 0");
  }
}

void FadingParams::validate() const {
  if (!std::isfinite(mean_db)) throw ValidationError("fading.mean_db must be finite");
  if (!(sigma_db > 0.0)) throw ValidationError("fading.sigma_db must be > 0");
}

void LinkSpec::validate() const {
  if (!(distance_m > 0.0)) throw ValidationError("link distance must be > 0");
  fading.validate();
}

double attenuation(const AttenuationParams& params, double distance_m) {
  params.validate();
  if (!(distance_m >= 0.0)) throw ValidationError("attenuation: distance must be >= 0");
  return std::exp(-params.alpha() * distance_m);
}

double lognormal_sq_cdf(double x, const FadingParams& fading) {
  fading.validate();
  if (!(x > 0.0)) throw ValidationError("lognormal_sq_cdf: argument must be > 0");
  // h^2 is log-normal with dB parameters (2*mean, 2*sigma).
  const double z = (linear_to_db(x) - 2.0 * fading.mean_db) / (2.0 * fading.sigma_db);
  return normal_cdf(z);
}

double sample_channel_gain_sq(const FadingParams& fading, RngStream& rng) {
  fading.validate();
  const double gain_db = rng.next_normal(fading.mean_db, fading.sigma_db);  // 10 log10(h)
  return db_to_linear(2.0 * gain_db);
}

}  // namespace plc
