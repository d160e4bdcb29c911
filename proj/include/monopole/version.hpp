#pragma once

namespace monopole {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace monopole
