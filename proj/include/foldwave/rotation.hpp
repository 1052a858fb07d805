#pragma once

#include <array>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace foldwave {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

/// Axis-angle rotation (Rodrigues). Throws DomainError if the axis is not
/// unit length within 1e-9.
Eigen::Matrix3d rotation(double angle, const Vec3& axis);

/// Crease directions and face normals produced by walking once around a
/// vertex: c[i+1] = R(theta[i], n[i]) c[i], n[i+1] = R(rho[(i+1) % 4], c[i+1]) n[i].
/// Index 4 is the wrap-around image of index 0.
struct VertexWalk {
  std::array<Vec3, 5> creases;
  std::array<Vec3, 5> normals;
};

/// Every rotated vector is renormalized; without it round-off in the axes
/// grows geometrically along a strip.
VertexWalk walk_vertex(const std::array<double, 4>& sector,
                       const std::array<double, 4>& rho, const Vec3& c0,
                       const Vec3& n0);

/// Signed angle from u to v about axis (right-handed).
double signed_angle(const Vec3& u, const Vec3& v, const Vec3& axis);

/// 2D rotation of v by angle (counterclockwise).
Vec2 rotate2d(double angle, const Vec2& v);

}  // namespace foldwave
