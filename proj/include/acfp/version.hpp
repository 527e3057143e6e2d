#pragma once

namespace acfp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace acfp
