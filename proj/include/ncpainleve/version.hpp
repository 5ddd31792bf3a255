#pragma once

namespace ncp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ncp
