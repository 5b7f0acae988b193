#pragma once

#include <numbers>

namespace lgt {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHbar = 1.054571817e-34;      // J s
inline constexpr double kSpeedOfLight = 2.99792458e8;  // m / s

inline constexpr const char* kToolVersion = "0.3.0";

}  // namespace lgt
