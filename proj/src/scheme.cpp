#include "plc/scheme.hpp"

#include <charconv>

#include "plc/errors.hpp"

namespace plc {

SchemeId SchemeId::multi_hop(int hops) {
  if (hops < 2) throw ValidationError("multi-hop scheme needs at least two hops");
  return {Kind::kMultiHop, hops};
}

SchemeId SchemeId::parse(std::string_view token) {
  if (token == "single-hop") return single_hop();
  if (token == "idf") return idf();
  constexpr std::string_view prefix = "multi-hop(";
  if (token.substr(0, prefix.size()) == prefix && token.back() == ')') {
    const std::string_view digits = token.substr(prefix.size(), token.size() - prefix.size() - 1);
    int hops = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), hops);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && hops >= 2) {
      return multi_hop(hops);
    }
  }
  throw ValidationError("unknown scheme '" + std::string(token) +
                        "' (expected single-hop, multi-hop(N), or idf)");
}

std::string SchemeId::label() const {
  switch (kind) {
    case Kind::kSingleHop:
      return "single-hop";
    case Kind::kMultiHop:
      return "multi-hop(" + std::to_string(hops) + ")";
    case Kind::kIdf:
      return "idf";
  }
  return "?";
}

}  // namespace plc
