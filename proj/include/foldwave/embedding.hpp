#pragma once

// 3D reconstruction of a folded strip.
//
// A vertex is placed by its center o, its four crease directions c^i and its
// four face normals n^i (face i is bounded by creases i and i+1). Vertex n+1
// is seeded from vertex n through the shared output crease:
//   o_{n+1} = o_n + l_n^{i_out} c_n^{i_out}
//   c_{n+1}^0 = -c_n^{i_out}
//   n_{n+1}^0 = n_n^{i_out - 1}

#include <array>
#include <cstddef>
#include <vector>

#include "foldwave/rotation.hpp"
#include "foldwave/strip_design.hpp"
#include "foldwave/vertex_kinematics.hpp"

namespace foldwave {

/// Position and orientation of face 0 of a vertex.
struct Frame {
  Vec3 origin = Vec3::Zero();
  Vec3 crease = Vec3::UnitX();
  Vec3 normal = Vec3::UnitZ();

  /// o = 0, c0 = +x, n0 = +z.
  static Frame canonical() { return {}; }
};

struct Pose {
  Vec3 origin = Vec3::Zero();
  std::array<Vec3, 4> creases;
  std::array<Vec3, 4> normals;
};

struct StripConfiguration {
  std::vector<Pose> poses;
  std::vector<CreaseLengths> lengths;
  std::vector<int> i_out;
  std::vector<VertexState> states;
  std::size_t period = 1;
};

struct Mesh {
  std::vector<Vec3> points;
  std::vector<std::array<int, 3>> faces;
};

/// Throws DomainError when the seed crease and normal are not unit and
/// orthogonal within 1e-9.
Pose vertex_pose(const SectorAngles& angles, const VertexState& state,
                 const Frame& seed = Frame::canonical());

/// Folds `cells` cells of the design from input angle rho00. Deterministic
/// for a given seed.
StripConfiguration propagate(const StripDesign& design, double rho00, std::size_t cells,
                             const Frame& seed = Frame::canonical());

/// Non-periodic designs: all listed cells. Periodic designs: one cell per
/// listed period.
StripConfiguration propagate(const StripDesign& design, double rho00,
                             const Frame& seed = Frame::canonical());

/// Four sector triangles (o, o + l^i c^i, o + l^{i+1} c^{i+1}) per vertex.
/// The vertex centers and the ends of the central creases are shared with
/// the neighbouring vertices.
Mesh build_mesh(const StripConfiguration& config);

/// Signed dihedral across the crease shared by vertices n and n+1, measured
/// from the face normals on either side (vertex n's face i_out, vertex n+1's
/// face 0) about vertex n+1's input crease.
double junction_dihedral(const StripConfiguration& config, std::size_t n);

/// Total turning of the central crease polyline over each cell, in (-pi, pi].
///
/// Turning is measured about the seed normal in the developed state. In the
/// flat-folded state it is measured about the opposite normal, the side from
/// which the reference face (face 0 of vertex 0) is face-down; this matches
/// the face-up/face-down parity used by turning_angles.
///
/// Throws NotPlanar unless all vertex centers and crease ends lie in the seed
/// plane within 1e-8 of the total crease length.
std::vector<double> measure_turning(const StripConfiguration& config);

}  // namespace foldwave
