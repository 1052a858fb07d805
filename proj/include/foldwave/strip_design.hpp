#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "foldwave/vertex_kinematics.hpp"

namespace foldwave {

using CreaseLengths = std::array<double, 4>;

inline constexpr CreaseLengths kUnitLengths{1.0, 1.0, 1.0, 1.0};

/// One vertex of a strip: sector angles, folding mode and output crease.
/// The input crease is always crease 0.
struct VertexSpec {
  SectorAngles angles;
  FoldMode mode;
  int i_out;

  /// Adjacent-crease connection (i_out = 1 or 3).
  bool couples() const { return i_out != 2; }

  friend bool operator==(const VertexSpec&, const VertexSpec&) = default;
};

/// Throws InvalidDesign for i_out outside {1, 2, 3} and SingularVertex for an
/// adjacent-crease vertex on a singular pair.
VertexSpec make_vertex(const SectorAngles& angles, FoldMode mode, int i_out);
VertexSpec make_vertex_deg(double theta0_deg, double theta1_deg, int sigma, int i_out);

/// Ordered crease pattern of a strip.
///
/// A periodic design lists one or more whole periods and repeats; vertex(n)
/// wraps. A non-periodic design lists every vertex, and `period` is the cell
/// stride used to sample the boundary orbit.
class StripDesign {
 public:
  /// Throws InvalidDesign when the period does not divide the vertex count,
  /// a periodic design is not actually periodic, or adjacent crease lengths
  /// disagree (lengths[n+1][0] must equal lengths[n][i_out(n)]).
  StripDesign(std::vector<VertexSpec> vertices, bool periodic, std::size_t period,
              std::vector<CreaseLengths> lengths = {});

  bool periodic() const { return periodic_; }
  std::size_t period() const { return period_; }
  /// Number of listed vertices.
  std::size_t size() const { return vertices_.size(); }
  std::span<const VertexSpec> vertices() const { return vertices_; }
  std::span<const CreaseLengths> lengths() const { return lengths_; }

  /// Vertex n of the (possibly repeated) strip.
  const VertexSpec& vertex(std::size_t n) const;
  const CreaseLengths& lengths(std::size_t n) const;

  /// Listed cells; a periodic design can be iterated past this count.
  std::size_t cell_count() const { return vertices_.size() / period_; }
  /// Number of vertices that can be walked: unbounded for periodic designs.
  bool can_reach(std::size_t vertex_count) const {
    return periodic_ || vertex_count <= vertices_.size();
  }
  /// The N vertex specs of cell t.
  std::span<const VertexSpec> cell(std::size_t t) const;

  friend bool operator==(const StripDesign&, const StripDesign&) = default;

 private:
  std::vector<VertexSpec> vertices_;
  bool periodic_;
  std::size_t period_;
  std::vector<CreaseLengths> lengths_;
};

/// Field-wise comparison with an angle tolerance (rad) and a relative length
/// tolerance.
bool approx_equal(const StripDesign& a, const StripDesign& b, double tol = 1e-12);

}  // namespace foldwave
