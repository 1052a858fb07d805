#include "foldwave/rotation.hpp"

#include <cmath>

#include "foldwave/errors.hpp"

namespace foldwave {

Eigen::Matrix3d rotation(double angle, const Vec3& axis) {
  if (std::abs(axis.norm() - 1.0) > 1e-9) {
    throw DomainError("rotation axis is not unit length");
  }
  return Eigen::AngleAxisd(angle, axis).toRotationMatrix();
}

VertexWalk walk_vertex(const std::array<double, 4>& sector,
                       const std::array<double, 4>& rho, const Vec3& c0,
                       const Vec3& n0) {
  VertexWalk w;
  w.creases[0] = c0;
  w.normals[0] = n0;
  for (int i = 0; i < 4; ++i) {
    w.creases[i + 1] = (rotation(sector[i], w.normals[i]) * w.creases[i]).normalized();
    w.normals[i + 1] =
        (rotation(rho[(i + 1) % 4], w.creases[i + 1]) * w.normals[i]).normalized();
  }
  return w;
}

double signed_angle(const Vec3& u, const Vec3& v, const Vec3& axis) {
  return std::atan2(u.cross(v).dot(axis), u.dot(v));
}

Vec2 rotate2d(double angle, const Vec2& v) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x() - s * v.y(), s * v.x() + c * v.y()};
}

}  // namespace foldwave
