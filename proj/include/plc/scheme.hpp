#pragma once

#include <string>
#include <string_view>

namespace plc {

// Transmission scheme selector shared by the energy reports, the sweep
// harness, and the CLI. Text form: "single-hop", "multi-hop(N)", "idf".
struct SchemeId {
  enum class Kind { kSingleHop, kMultiHop, kIdf };

  Kind kind = Kind::kSingleHop;
  int hops = 1;  // >= 2 when kind == kMultiHop

  static SchemeId single_hop() { return {Kind::kSingleHop, 1}; }
  static SchemeId multi_hop(int hops);
  static SchemeId idf() { return {Kind::kIdf, 2}; }
  static SchemeId parse(std::string_view token);

  std::string label() const;

  friend bool operator==(const SchemeId&, const SchemeId&) = default;
};

}  // namespace plc
