#pragma once

namespace primfree {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace primfree
