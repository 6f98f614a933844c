#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "plc/channel.hpp"

namespace plc {

// Ordered hops from source to destination, optionally with the direct
// source->destination path (required by incremental relaying). When the
// direct path is present its distance must equal the hop-distance sum to
// within 1e-9 relative.
struct Topology {
  std::vector<LinkSpec> links;
  std::optional<LinkSpec> direct;

  std::size_t hops() const { return links.size(); }
  double total_distance() const;
  void validate() const;

  static Topology single(double distance_m, const FadingParams& fading);
  static Topology equal_spacing(double total_distance_m, std::size_t hops,
                                const FadingParams& fading);
  // Two hops of half the distance plus the full-length direct path.
  static Topology idf_midpoint(double total_distance_m, const FadingParams& fading);
};

}  // namespace plc
