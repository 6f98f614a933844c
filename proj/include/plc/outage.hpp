#pragma once

#include <optional>
#include <vector>

#include "plc/channel.hpp"
#include "plc/noise.hpp"
#include "plc/topology.hpp"

namespace plc {

// End-to-end outage with the per-link terms it was composed from, so every
// composition stays auditable.
struct OutageBreakdown {
  double end_to_end = 0.0;
  std::vector<double> per_link;            // aligned with Topology::links
  std::optional<double> direct_link;       // incremental relaying only
};

/// Outage probability of a single link at the given transmit power.
/// Strictly decreasing in power; tends to 1 as power -> 0 and to 0 as
/// power -> infinity.
double link_outage(double power_w, const LinkSpec& link, const NoiseParams& noise,
                   const AttenuationParams& att, double spectral_efficiency);

/// Direct transmission over a one-hop topology.
OutageBreakdown single_hop_outage(double power_w, const Topology& topology,
                                  const NoiseParams& noise, const AttenuationParams& att,
                                  double spectral_efficiency);

/// Decode-and-forward chain of two or more hops, every transmitter using the
/// same power.
OutageBreakdown multihop_outage(double power_w, const Topology& topology,
                                const NoiseParams& noise, const AttenuationParams& att,
                                double spectral_efficiency);

/// Incremental decode-and-forward: the relay transmits only when the direct
/// path fails. Requires a topology with a direct link and two equal-length
/// hops. end_to_end never exceeds the direct-link outage.
OutageBreakdown idf_outage(double power_w, const Topology& topology,
                           const NoiseParams& noise, const AttenuationParams& att,
                           double spectral_efficiency);

/// Chain composition by disjoint first-failure events. Equals
/// 1 - prod(1 - O_n) but sums positive terms, so it stays exact when the
/// per-link outages are far below machine epsilon.
double compose_chain_outage(const std::vector<double>& per_link);

/// Incremental-DF outage through the expanded erf identity
/// (3 + X + Y + 3Z + XZ + YZ - XY - XYZ)/8 with X, Y, Z the erf terms of the
/// two hops and the direct path. Algebraically identical to
/// idf_outage().end_to_end; kept as an independent cross-check route.
double idf_outage_expanded(double power_w, const Topology& topology,
                           const NoiseParams& noise, const AttenuationParams& att,
                           double spectral_efficiency);

}  // namespace plc
