#include "plc/topology.hpp"

#include <cmath>
#include <numeric>

#include "plc/errors.hpp"

namespace plc {

double Topology::total_distance() const {
  return std::accumulate(links.begin(), links.end(), 0.0,
                         [](double acc, const LinkSpec& l) { return acc + l.distance_m; });
}

void Topology::validate() const {
  if (links.empty()) throw ValidationError("topology: at least one hop is required");
  for (const LinkSpec& link : links) link.validate();
  if (direct) {
    direct->validate();
    const double sum = total_distance();
    if (std::fabs(direct->distance_m - sum) > 1e-9 * direct->distance_m) {
      throw ValidationError("topology: direct-path distance must equal the hop-distance sum");
    }
  }
}

Topology Topology::single(double distance_m, const FadingParams& fading) {
  Topology t;
  t.links.push_back({distance_m, fading});
  t.validate();
  return t;
}

Topology Topology::equal_spacing(double total_distance_m, std::size_t hops,
                                 const FadingParams& fading) {
  if (hops == 0) throw ValidationError("topology: at least one hop is required");
  Topology t;
  t.links.assign(hops, {total_distance_m / static_cast<double>(hops), fading});
  t.validate();
  return t;
}

Topology Topology::idf_midpoint(double total_distance_m, const FadingParams& fading) {
  Topology t;
  t.links.assign(2, {total_distance_m / 2.0, fading});
  t.direct = LinkSpec{total_distance_m, fading};
  t.validate();
  return t;
}

}  // namespace plc
