#include "plc/noise.hpp"

#include <cmath>
#include <limits>

#include "plc/errors.hpp"
#include "plc/units.hpp"

namespace plc {

double NoiseParams::background_var() const { return db_to_linear(-sbnr_db); }

double NoiseParams::impulse_var() const { return db_to_linear(-sinr_db); }

double NoiseParams::impulsive_penalty() const { return 1.0 + impulse_var() / background_var(); }

void NoiseParams::validate() const {
  if (!(impulse_prob >= 0.0 && impulse_prob <= 1.0)) {
    throw ValidationError("noise.p must lie in [0, 1]");
  }
  if (!std::isfinite(sbnr_db)) throw ValidationError("noise.sbnr_db must be finite");
  // +inf sinr_db is the impulse-free limit; -inf would make the variance blow up.
  if (std::isnan(sinr_db) || sinr_db == -std::numeric_limits<double>::infinity()) {
    throw ValidationError("noise.sinr_db must be finite or +inf");
  }
}

double noise_threshold(const NoiseParams& noise, double spectral_efficiency) {
  noise.validate();
  if (!(spectral_efficiency > 0.0)) {
    throw ValidationError("noise_threshold: spectral efficiency must be > 0");
  }
  return std::pow(noise.impulsive_penalty(), noise.impulse_prob) * std::exp2(spectral_efficiency);
}

}  // namespace plc
