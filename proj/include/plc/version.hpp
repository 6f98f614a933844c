#pragma once

namespace plc {

inline constexpr const char* kToolName = "plcrelay";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace plc
