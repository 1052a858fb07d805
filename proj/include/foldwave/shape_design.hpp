#pragma once

// Macroscopic shape of a strip and inverse design from a target polyline.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "foldwave/rotation.hpp"
#include "foldwave/strip_design.hpp"
#include "foldwave/vertex_kinematics.hpp"

namespace foldwave {

/// Total turning of the central crease polyline over one cell, in (-pi, pi].
struct TurningAngles {
  double developed = 0.0;
  double flat_folded = 0.0;
};

/// Closed-form turning from sector angles and connectivity. Face (n, i) is
/// counted with parity s(n, i) = i + sum_{m<n} (i_out(m) - 1) mod 2 in the
/// flat-folded state. Values within 1e-12 rad of zero after reduction are
/// returned as exactly zero. Throws NotPeriodic for a non-periodic design.
TurningAngles turning_angles(const StripDesign& design);

/// Solves cos t0 cos t1 + sigma = ratio * sin t0 sin t1 for the free sector
/// angle, given the angle at index `fixed_index` (0 or 1).
///
/// Root choice when two roots lie in (0, pi): roots whose branch factor
/// sgn(cos t0 + sigma cos t1) equals `branch` (when given) are preferred,
/// then nonsingular roots, then the smaller angle. Throws NoSolution when no
/// root lies in (0, pi) and SingularResult when only singular roots remain.
SectorAngles solve_sector_for_ratio(double theta_fixed, int fixed_index, FoldMode mode,
                                    double ratio, std::optional<int> branch = std::nullopt);

enum class PlanVariant {
  /// Point-symmetric zigzag inside each cell.
  Standard,
  /// Both in-cell rotations reversed (Miura-ori-style strip).
  Reversed,
};

/// Placement of four vertex centers per polyline segment.
struct PolylinePlan {
  std::vector<Vec2> points;
  double segment_length = 0.0;  // L
  double crease_length = 0.0;   // l
  double phi_star = 0.0;
  double phi_initial = 0.0;
  PlanVariant variant = PlanVariant::Standard;

  /// Segment directions; the last entry repeats the final segment and is
  /// used at the terminal point.
  std::vector<Vec2> directions;
  /// Offset angle at every polyline point, t = 0..T.
  std::vector<double> phi;
  /// Per cell, t = 0..T-1.
  std::vector<double> psi;
  std::vector<double> psi_bar;
  std::vector<double> aux;
  std::vector<double> chord;
  /// 4T central crease points.
  std::vector<Vec2> centers;

  std::size_t cells() const { return psi.size(); }
  /// Far end of the input crease of vertex 0 (mirror of o_0 through p_0).
  Vec2 entry() const;
  /// Far end of the output crease of the last vertex.
  Vec2 exit() const;
};

/// Throws NonUniformPolyline when segment lengths differ by more than 1e-6
/// relative (or fewer than two points are given), GeometryInfeasible when
/// l > L/3 or a cell's chain of three crease segments cannot span its chord.
PolylinePlan map_polyline(std::span<const Vec2> points, double crease_length, double phi_star,
                          double phi_initial, PlanVariant variant = PlanVariant::Standard);

/// Counterclockwise interior angle at every plan center, from the input
/// crease (towards o_{n-1}) to the output crease (towards o_{n+1}), in [0, 2pi).
std::vector<double> interior_angles(const PolylinePlan& plan);

/// Builds a non-periodic strip over the plan using the period-4 template
/// for connectivity and modes. Adjacent-crease vertices take their fixed
/// angle from the central polyline and solve the other for `ratio` on the
/// template vertex's branch; opposite-crease vertices split their interior
/// angle symmetrically. All crease lengths are set to l.
StripDesign polyline_to_strip(const PolylinePlan& plan, const StripDesign& template_design,
                              double ratio);

/// A/B of the first adjacent-crease vertex of a template.
double template_ratio(const StripDesign& template_design);

/// Folds the design in its developed state from vertex 0 placed at o_0 and
/// returns the largest distance between the reconstructed vertex centers
/// (and the far end of the last output crease) and the plan.
double plan_deviation(const PolylinePlan& plan, const StripDesign& design);

}  // namespace foldwave
