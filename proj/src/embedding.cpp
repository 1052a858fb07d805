#include "foldwave/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "foldwave/errors.hpp"
#include "foldwave/strip_dynamics.hpp"

namespace foldwave {

namespace {

constexpr double kFrameTolerance = 1e-9;
constexpr double kPlanarTolerance = 1e-8;

void check_frame(const Frame& seed) {
  if (std::abs(seed.crease.norm() - 1.0) > kFrameTolerance ||
      std::abs(seed.normal.norm() - 1.0) > kFrameTolerance) {
    throw DomainError("seed crease and normal must be unit vectors");
  }
  if (std::abs(seed.crease.dot(seed.normal)) > kFrameTolerance) {
    throw DomainError("seed crease and normal must be orthogonal");
  }
}

Vec3 tip(const StripConfiguration& config, std::size_t n, int i) {
  const Pose& pose = config.poses[n];
  return pose.origin + config.lengths[n][i] * pose.creases[i];
}

Vec3 face_normal(const StripConfiguration& config, std::size_t n, int face) {
  const Vec3 o = config.poses[n].origin;
  const Vec3 u = tip(config, n, face) - o;
  const Vec3 v = tip(config, n, (face + 1) % 4) - o;
  return u.cross(v).normalized();
}

}  // namespace

Pose vertex_pose(const SectorAngles& angles, const VertexState& state, const Frame& seed) {
  check_frame(seed);
  const VertexWalk w = walk_vertex(angles.all(), state.rho, seed.crease, seed.normal);
  Pose pose;
  pose.origin = seed.origin;
  for (int i = 0; i < 4; ++i) {
    pose.creases[i] = w.creases[i];
    pose.normals[i] = w.normals[i];
  }
  return pose;
}

StripConfiguration propagate(const StripDesign& design, double rho00, std::size_t cells,
                             const Frame& seed) {
  check_frame(seed);
  const Orbit orbit = iterate(design, rho00, cells);

  StripConfiguration config;
  config.period = design.period();
  const std::size_t count = orbit.full_states.size();
  config.poses.reserve(count);
  config.lengths.reserve(count);
  config.i_out.reserve(count);
  config.states = orbit.full_states;

  Frame frame = seed;
  for (std::size_t n = 0; n < count; ++n) {
    const VertexSpec& spec = design.vertex(n);
    const Pose pose = vertex_pose(spec.angles, orbit.full_states[n], frame);
    const CreaseLengths& lengths = design.lengths(n);
    const int out = spec.i_out;

    frame.origin = pose.origin + lengths[out] * pose.creases[out];
    frame.crease = -pose.creases[out];
    frame.normal = pose.normals[out - 1];

    config.poses.push_back(pose);
    config.lengths.push_back(lengths);
    config.i_out.push_back(out);
  }
  return config;
}

StripConfiguration propagate(const StripDesign& design, double rho00, const Frame& seed) {
  return propagate(design, rho00, design.cell_count(), seed);
}

Mesh build_mesh(const StripConfiguration& config) {
  Mesh mesh;
  const std::size_t count = config.poses.size();
  mesh.points.reserve(2 + 3 * count);
  mesh.faces.reserve(4 * count);

  int previous_center = -1;
  int previous_out_tip = -1;
  for (std::size_t n = 0; n < count; ++n) {
    std::array<int, 4> tips{};
    int center = 0;
    if (n == 0) {
      center = static_cast<int>(mesh.points.size());
      mesh.points.push_back(config.poses[n].origin);
      for (int i = 0; i < 4; ++i) {
        tips[i] = static_cast<int>(mesh.points.size());
        mesh.points.push_back(tip(config, n, i));
      }
    } else {
      center = previous_out_tip;
      tips[0] = previous_center;
      for (int i = 1; i < 4; ++i) {
        tips[i] = static_cast<int>(mesh.points.size());
        mesh.points.push_back(tip(config, n, i));
      }
    }
    for (int i = 0; i < 4; ++i) mesh.faces.push_back({center, tips[i], tips[(i + 1) % 4]});
    previous_center = center;
    previous_out_tip = tips[config.i_out[n]];
  }
  return mesh;
}

double junction_dihedral(const StripConfiguration& config, std::size_t n) {
  if (n + 1 >= config.poses.size()) throw DomainError("junction index past the strip end");
  const Vec3 outer = face_normal(config, n, config.i_out[n]);
  const Vec3 inner = face_normal(config, n + 1, 0);
  return signed_angle(outer, inner, config.poses[n + 1].creases[0]);
}

std::vector<double> measure_turning(const StripConfiguration& config) {
  if (config.poses.empty()) return {};
  const Vec3 origin = config.poses[0].origin;
  const Vec3 normal = config.poses[0].normals[0];

  double total_length = 0.0;
  for (std::size_t n = 0; n < config.poses.size(); ++n) {
    total_length += config.lengths[n][config.i_out[n]];
  }
  const double tolerance = kPlanarTolerance * std::max(total_length, 1.0);

  bool flat_folded = false;
  for (std::size_t n = 0; n < config.poses.size(); ++n) {
    const Pose& pose = config.poses[n];
    if (std::abs((pose.origin - origin).dot(normal)) > tolerance) {
      throw NotPlanar("vertex " + std::to_string(n) + " leaves the reference plane");
    }
    for (int i = 0; i < 4; ++i) {
      if (std::abs((tip(config, n, i) - origin).dot(normal)) > tolerance) {
        throw NotPlanar("crease " + std::to_string(i) + " of vertex " + std::to_string(n) +
                        " leaves the reference plane");
      }
      if (pose.normals[i].dot(normal) < 0.0) flat_folded = true;
    }
  }

  const Vec3 view = flat_folded ? Vec3(-normal) : normal;
  const std::size_t period = config.period;
  const std::size_t cells = config.poses.size() / period;
  std::vector<double> turning(cells, 0.0);
  for (std::size_t t = 0; t < cells; ++t) {
    double sum = 0.0;
    for (std::size_t k = 0; k < period; ++k) {
      const std::size_t n = t * period + k;
      const Pose& pose = config.poses[n];
      sum += signed_angle(-pose.creases[0], pose.creases[config.i_out[n]], view);
    }
    turning[t] = wrap_angle(sum);
  }
  return turning;
}

}  // namespace foldwave
