#pragma once

#include <cstdint>

namespace plc {

// Counter-seeded generator: a (seed, stream) pair fully determines the draw
// sequence, so callers can derive one stream per trial without shared state.
// Identical (seed, stream) always replays the identical sequence.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  double next_uniform();  // strictly inside (0, 1)
  double next_normal(double mean, double stddev);

 private:
  std::uint64_t state_;
};

}  // namespace plc
