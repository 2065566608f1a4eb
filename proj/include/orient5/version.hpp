#pragma once

namespace orient5 {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace orient5
