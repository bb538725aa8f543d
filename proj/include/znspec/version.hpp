#pragma once

namespace znspec {

inline constexpr const char* kToolName = "znspec";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace znspec
