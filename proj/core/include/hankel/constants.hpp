#pragma once

#include <numbers>

namespace hankel {

/// Largest kernel order ell supported by every module.
inline constexpr int kMaxOrder = 8;

/// Highest sinc derivative needed anywhere (2 * kMaxOrder + 4).
inline constexpr int kMaxSincDerivative = 2 * kMaxOrder + 4;

inline constexpr double kPi = std::numbers::pi;

// Euler-Mascheroni constant, 20 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

}  // namespace hankel
