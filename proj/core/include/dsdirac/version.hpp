#pragma once

namespace dsdirac {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dsdirac
