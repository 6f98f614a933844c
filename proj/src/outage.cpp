#include "plc/outage.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "plc/errors.hpp"
#include "plc/units.hpp"

namespace plc {

namespace {

constexpr double kSqrt8 = 2.8284271247461903;

// Compositions of values in [0, 1] can drift a few ulps outside the unit
// interval; anything larger than 1e-12 would indicate a real defect.
double clamp01(double v) {
  const double c = std::clamp(v, 0.0, 1.0);
  assert(std::fabs(c - v) <= 1e-12);
  return c;
}

void require_idf_topology(const Topology& topology) {
  topology.validate();
  if (!topology.direct) {
    throw ValidationError("idf: topology must carry a direct source->destination link");
  }
  if (topology.links.size() != 2) {
    throw ValidationError("idf: topology must have exactly two hops");
  }
  const double d0 = topology.links[0].distance_m;
  const double d1 = topology.links[1].distance_m;
  if (std::fabs(d0 - d1) > 1e-9 * std::max(d0, d1)) {
    throw ValidationError("idf: the two hops must have equal length");
  }
}

}  // namespace

double link_outage(double power_w, const LinkSpec& link, const NoiseParams& noise,
                   const AttenuationParams& att, double spectral_efficiency) {
  link.validate();
  if (!(power_w > 0.0)) throw ValidationError("link_outage: transmit power must be > 0");
  const double snr_scale = power_w * attenuation(att, link.distance_m) / noise.background_var();
  return lognormal_sq_cdf(noise_threshold(noise, spectral_efficiency) / snr_scale, link.fading);
}

OutageBreakdown single_hop_outage(double power_w, const Topology& topology,
                                  const NoiseParams& noise, const AttenuationParams& att,
                                  double spectral_efficiency) {
  topology.validate();
  if (topology.links.size() != 1) {
    throw ValidationError("single_hop_outage: topology must have exactly one link");
  }
  OutageBreakdown out;
  out.per_link.push_back(
      link_outage(power_w, topology.links[0], noise, att, spectral_efficiency));
  out.end_to_end = out.per_link[0];
  return out;
}

OutageBreakdown multihop_outage(double power_w, const Topology& topology,
                                const NoiseParams& noise, const AttenuationParams& att,
                                double spectral_efficiency) {
  topology.validate();
  if (topology.links.size() < 2) {
    throw ValidationError("multihop_outage: topology must have at least two hops");
  }
  OutageBreakdown out;
  out.per_link.reserve(topology.links.size());
  for (const LinkSpec& link : topology.links) {
    out.per_link.push_back(link_outage(power_w, link, noise, att, spectral_efficiency));
  }
  out.end_to_end = compose_chain_outage(out.per_link);
  return out;
}

OutageBreakdown idf_outage(double power_w, const Topology& topology, const NoiseParams& noise,
                           const AttenuationParams& att, double spectral_efficiency) {
  require_idf_topology(topology);
  OutageBreakdown out;
  out.direct_link = link_outage(power_w, *topology.direct, noise, att, spectral_efficiency);
  out.per_link.push_back(
      link_outage(power_w, topology.links[0], noise, att, spectral_efficiency));
  out.per_link.push_back(
      link_outage(power_w, topology.links[1], noise, att, spectral_efficiency));
  const double relayed = out.per_link[0] + (1.0 - out.per_link[0]) * out.per_link[1];
  out.end_to_end = clamp01(*out.direct_link * relayed);
  return out;
}

double compose_chain_outage(const std::vector<double>& per_link) {
  if (per_link.empty()) throw ValidationError("compose_chain_outage: no per-link terms");
  for (double o : per_link) {
    if (!(o >= 0.0 && o <= 1.0)) {
      throw ValidationError("compose_chain_outage: probabilities must lie in [0, 1]");
    }
  }
  if (per_link.size() == 1) return per_link[0];
  // Disjoint first-failure events: summing positive terms keeps the result
  // exact where 1 - prod(1 - O_n) would cancel to zero.
  double tail = 0.0;
  double prefix = 1.0;
  for (std::size_t m = 1; m + 1 < per_link.size(); ++m) {
    tail += per_link[m] * prefix;
    prefix *= 1.0 - per_link[m];
  }
  tail += per_link.back() * prefix;
  return clamp01(per_link[0] + (1.0 - per_link[0]) * tail);
}

double idf_outage_expanded(double power_w, const Topology& topology, const NoiseParams& noise,
                           const AttenuationParams& att, double spectral_efficiency) {
  require_idf_topology(topology);
  if (!(power_w > 0.0)) throw ValidationError("idf_outage_expanded: transmit power must be > 0");
  const double threshold = noise_threshold(noise, spectral_efficiency);
  const auto erf_term = [&](const LinkSpec& link) {
    const double snr_scale =
        power_w * attenuation(att, link.distance_m) / noise.background_var();
    return std::erf((linear_to_db(threshold / snr_scale) - 2.0 * link.fading.mean_db) /
                    (kSqrt8 * link.fading.sigma_db));
  };
  const double x = erf_term(topology.links[0]);
  const double y = erf_term(topology.links[1]);
  const double z = erf_term(*topology.direct);
  return (3.0 + x + y + 3.0 * z + x * z + y * z - x * y - x * y * z) / 8.0;
}

}  // namespace plc
