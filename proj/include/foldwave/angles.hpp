#pragma once

#include <cmath>
#include <numbers>

namespace foldwave {

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

/// Sign with sgn(0) = 0.
constexpr int sgn(double x) { return (x > 0.0) - (x < 0.0); }

/// Reduces an angle into (-pi, pi]; -pi maps to +pi.
inline double wrap_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

}  // namespace foldwave
