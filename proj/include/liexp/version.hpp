#pragma once

namespace liexp {
inline constexpr const char* kToolName = "liexp";
inline constexpr const char* kToolVersion = "0.1.0";
} // namespace liexp
