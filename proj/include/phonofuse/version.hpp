#pragma once

namespace phonofuse {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace phonofuse
