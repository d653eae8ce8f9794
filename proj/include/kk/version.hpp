#pragma once

namespace kk {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace kk
