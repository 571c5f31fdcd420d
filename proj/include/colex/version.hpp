#pragma once

namespace colex {

inline constexpr const char* kToolName = "colex";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace colex
