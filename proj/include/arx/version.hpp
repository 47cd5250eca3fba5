#pragma once

namespace arx {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace arx
