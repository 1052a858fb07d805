#pragma once

// Offset-hinge link lengths for thick panels.

#include <array>
#include <cstddef>
#include <vector>

#include "foldwave/strip_design.hpp"
#include "foldwave/vertex_kinematics.hpp"

namespace foldwave {

/// d[1] = d[0] sin theta1 / sin theta0, d[2] = d[0], d[3] = d[1].
struct BennettOffsets {
  std::array<double, 4> d{};
};

/// Throws DomainError for d0 <= 0.
BennettOffsets bennett_offsets(const SectorAngles& angles, double d0);

inline constexpr double kThicknessUnitTolerance = 1e-9;

struct ThicknessProfile {
  /// Offsets of every walked vertex; offsets[n+1].d[0] = offsets[n].d[i_out(n)].
  std::vector<BennettOffsets> offsets;
  /// d0 ratio across each cell, d0(t N + N) / d0(t N).
  std::vector<double> cell_ratio;
  /// Some cell ratio differs from 1 by more than 1e-9.
  bool exponential = false;
};

/// Carries the shared-crease offset from vertex to vertex over `cells`
/// cells. Throws DomainError for d0 <= 0 or a strip shorter than `cells`.
ThicknessProfile thickness_profile(const StripDesign& design, double d0, std::size_t cells);
/// All listed cells.
ThicknessProfile thickness_profile(const StripDesign& design, double d0);

struct PanelInsertion {
  bool feasible = true;
  /// Listed vertex indices whose sector angles are not mirror symmetric.
  std::vector<std::size_t> offending;
};

/// Rectangular panels fit across every opposite-crease vertex iff its two
/// free sector angles agree (within 1e-9 rad). The odd-indexed vertices are
/// tested; throws WrongConnectivity when one of them has i_out != 2.
PanelInsertion can_insert_rectangular_panels(const StripDesign& design);

}  // namespace foldwave
