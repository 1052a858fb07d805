#pragma once

// The strip recurrence: cell-boundary fold angle rho_t -> rho_{t+1}.
//
// Each adjacent-crease vertex relates cosines of its input and output fold
// angles by the symmetric fractional linear map x -> (A x + B) / (B x + A),
// i.e. by the matrix [[A, B], [B, A]]. Such matrices commute and are closed
// under products, so a whole cell reduces to one (a_eff, b_eff) pair plus a
// sign branch.

#include <cstddef>
#include <span>
#include <vector>

#include "foldwave/strip_design.hpp"
#include "foldwave/vertex_kinematics.hpp"

namespace foldwave {

struct CellMap {
  /// Normalized so that max(|a_eff|, |b_eff|) = 1.
  double a_eff = 1.0;
  double b_eff = 0.0;
  /// sgn(f(rho)) = branch_sign * sgn(rho).
  int branch_sign = 1;
  /// Signed slope of f at the developed state.
  double p_eff = 1.0;

  /// Evaluates f through the cosine map and branch sign.
  double operator()(double rho) const;
};

struct Orbit {
  /// Input fold angle at every cell boundary, t = 0..cells.
  std::vector<double> rho_t;
  /// Fold angles of every visited vertex, cells * N entries.
  std::vector<VertexState> full_states;
};

enum class Propagation {
  /// f = +-identity for every sector-angle choice: no adjacent-crease vertex.
  Degenerate,
  /// |p_eff| = 1: the adjacent-crease asymmetries cancel.
  Uniform,
  /// Heteroclinic orbit between the developed and flat-folded fixed points.
  DominoLike,
};

enum class FixedPoint { Developed, FlatFolded, None };

struct Classification {
  Propagation kind = Propagation::Degenerate;
  double p_eff = 1.0;
  /// Fixed point that attracts forward iteration along the strip; the other
  /// one attracts backward iteration. |p_eff| < 1 makes the developed state
  /// attracting, so a flat-folded front driven at t = 0 decays into the strip.
  FixedPoint attracting = FixedPoint::None;

  /// Uniform and degenerate strips both deploy without a front.
  bool deploys_uniformly() const { return kind != Propagation::DominoLike; }
};

const char* to_string(Propagation kind);
const char* to_string(FixedPoint point);

/// Output fold angle of one vertex for input rho_in.
double local_map(const VertexSpec& spec, double rho_in);

/// Sequential composition of local maps over a cell.
double apply_cell(std::span<const VertexSpec> cell, double rho_in);

/// Throws DegenerateMap when the cell has no adjacent-crease vertex (f is
/// then the identity or its negative).
CellMap compose_cell(std::span<const VertexSpec> cell);

/// Throws SingularVertex when any visited vertex is singular (its full state
/// is undefined) and DomainError when the strip is shorter than `cells`.
Orbit iterate(const StripDesign& design, double rho0, std::size_t cells);

/// 2 arctan(tan(rho0/2) p^t), with the sign split as sgn(rho0) sgn(p)^t.
/// Throws DomainError for |rho0| >= pi or p = 0.
double sigmoid_value(double rho0, double p, long t);

/// 10-90% width of the front in cells: |2 log(tan(pi/20)) / log|p||.
/// Throws UniformMap for |p| = 1 and DomainError for p = 0.
double transition_width(double p);

Classification classify(const CellMap& map);
/// Same as classify(compose_cell(cell)) with DegenerateMap mapped to Degenerate.
Classification classify(std::span<const VertexSpec> cell);

}  // namespace foldwave
