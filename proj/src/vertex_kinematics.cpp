#include "foldwave/vertex_kinematics.hpp"

#include <cmath>
#include <string>

#include "foldwave/errors.hpp"
#include "foldwave/rotation.hpp"

namespace foldwave {

SectorAngles SectorAngles::from_radians(double theta0, double theta1) {
  auto inside = [](double t) { return std::isfinite(t) && t > 0.0 && t < kPi; };
  if (!inside(theta0) || !inside(theta1)) {
    throw DomainError("sector angles must lie strictly between 0 and 180 degrees, got (" +
                      std::to_string(rad_to_deg(theta0)) + ", " +
                      std::to_string(rad_to_deg(theta1)) + ")");
  }
  return SectorAngles(theta0, theta1);
}

SectorAngles SectorAngles::from_degrees(double theta0_deg, double theta1_deg) {
  return from_radians(deg_to_rad(theta0_deg), deg_to_rad(theta1_deg));
}

FoldMode::FoldMode(int sigma) : sigma_(sigma) {
  if (sigma != 1 && sigma != -1) {
    throw DomainError("folding mode must be -1 or +1, got " + std::to_string(sigma));
  }
}

bool is_singular(const SectorAngles& angles, FoldMode mode) {
  if (mode.sigma() < 0) {
    return std::abs(angles.theta0() - angles.theta1()) < kSingularTolerance;
  }
  return std::abs(angles.theta0() + angles.theta1() - kPi) < kSingularTolerance;
}

AbCoefficients ab_coefficients(const SectorAngles& angles, FoldMode mode) {
  const double t0 = angles.theta0();
  const double t1 = angles.theta1();
  return {std::cos(t0) * std::cos(t1) + mode.sigma(), std::sin(t0) * std::sin(t1)};
}

// cos t0 + cos t1 = 2 cos(s/2) cos(d/2) and cos t0 - cos t1 = -2 sin(s/2) sin(d/2)
// with s = t0 + t1, d = t0 - t1; for t0, t1 in (0, pi) only one factor can vanish.
int branch_factor(const SectorAngles& angles, FoldMode mode) {
  if (mode.sigma() > 0) return sgn(kPi - angles.theta0() - angles.theta1());
  return sgn(angles.theta1() - angles.theta0());
}

namespace {

void require_nonsingular(const SectorAngles& angles, FoldMode mode) {
  if (is_singular(angles, mode)) {
    throw SingularVertex("singular vertex (" + std::to_string(rad_to_deg(angles.theta0())) +
                         ", " + std::to_string(rad_to_deg(angles.theta1())) +
                         ") deg with sigma = " + std::to_string(mode.sigma()));
  }
}

// |p| = sqrt((A-B)/(A+B)) written with half-angle products so that it keeps
// precision close to the singular pairs:
//   sigma = +1: A-B = 2 cos^2(s/2), A+B = 2 cos^2(d/2)
//   sigma = -1: A-B = -2 sin^2(s/2), A+B = -2 sin^2(d/2)
double multiplier_magnitude(const SectorAngles& angles, FoldMode mode) {
  const double half_sum = 0.5 * (angles.theta0() + angles.theta1());
  const double half_diff = 0.5 * (angles.theta0() - angles.theta1());
  if (mode.sigma() > 0) return std::abs(std::cos(half_sum) / std::cos(half_diff));
  return std::abs(std::sin(half_sum) / std::sin(half_diff));
}

}  // namespace

VertexState fold_angles(const SectorAngles& angles, FoldMode mode, double rho0) {
  require_nonsingular(angles, mode);
  if (!std::isfinite(rho0) || std::abs(rho0) > kPi) {
    throw DomainError("input fold angle outside [-180, 180] degrees: " +
                      std::to_string(rad_to_deg(rho0)));
  }

  const auto [a, b] = ab_coefficients(angles, mode);
  const double c = std::cos(rho0);
  const double q = (a * c + b) / (b * c + a);
  if (!(std::abs(q) <= 1.0 + kArccosWindow)) {
    throw DomainError("arccos argument " + std::to_string(q) + " outside [-1, 1]");
  }

  const double magnitude =
      std::abs(rho0) == kPi
          ? kPi
          : 2.0 * std::atan(multiplier_magnitude(angles, mode) * std::tan(0.5 * std::abs(rho0)));

  const int sigma = mode.sigma();
  const double rho1 = -sgn(rho0) * branch_factor(angles, mode) * magnitude;
  return VertexState{{rho0, rho1, sigma * rho0, -sigma * rho1}};
}

double folding_multiplier(const SectorAngles& angles, FoldMode mode) {
  require_nonsingular(angles, mode);
  return -branch_factor(angles, mode) * multiplier_magnitude(angles, mode);
}

double closure_residual(const SectorAngles& angles, const VertexState& state) {
  const Vec3 c0 = Vec3::UnitX();
  const Vec3 n0 = Vec3::UnitZ();
  const VertexWalk w = walk_vertex(angles.all(), state.rho, c0, n0);
  return (w.creases[4] - c0).norm() + (w.normals[4] - n0).norm();
}

}  // namespace foldwave
