#pragma once

namespace extrad {

inline constexpr const char* kToolName = "extrad";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace extrad
