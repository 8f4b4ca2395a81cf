#pragma once

namespace nswp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nswp
