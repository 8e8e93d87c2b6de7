#pragma once

namespace hhb {

inline constexpr const char kToolName[] = "hhbound";
inline constexpr const char kToolVersion[] = "0.1.0";

}  // namespace hhb
