#pragma once

namespace aubench {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace aubench
