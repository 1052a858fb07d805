#include "foldwave/strip_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "foldwave/errors.hpp"

namespace foldwave {

namespace {

constexpr double kUnitTolerance = 1e-9;
// Probe angle used to read the sign branch of a composed cell.
constexpr double kBranchProbe = 1e-3;

}  // namespace

const char* to_string(Propagation kind) {
  switch (kind) {
    case Propagation::Degenerate: return "Degenerate";
    case Propagation::Uniform: return "Uniform";
    case Propagation::DominoLike: return "DominoLike";
  }
  return "?";
}

const char* to_string(FixedPoint point) {
  switch (point) {
    case FixedPoint::Developed: return "developed";
    case FixedPoint::FlatFolded: return "flat-folded";
    case FixedPoint::None: return "none";
  }
  return "?";
}

// tan(|f|/2) = |p_eff| tan(|rho|/2) is the cosine map (a x + b)/(b x + a)
// rewritten in half-angle form.
double CellMap::operator()(double rho) const {
  if (std::abs(rho) > kPi) throw DomainError("fold angle outside [-180, 180] degrees");
  const double magnitude =
      std::abs(rho) == kPi ? kPi : 2.0 * std::atan(std::abs(p_eff) * std::tan(0.5 * std::abs(rho)));
  return branch_sign * sgn(rho) * magnitude;
}

double local_map(const VertexSpec& spec, double rho_in) {
  if (spec.i_out == 2) {
    if (std::abs(rho_in) > kPi) throw DomainError("fold angle outside [-180, 180] degrees");
    return spec.mode.sigma() * rho_in;
  }
  return fold_angles(spec.angles, spec.mode, rho_in).rho[spec.i_out];
}

double apply_cell(std::span<const VertexSpec> cell, double rho_in) {
  double rho = rho_in;
  for (const VertexSpec& spec : cell) rho = local_map(spec, rho);
  return rho;
}

CellMap compose_cell(std::span<const VertexSpec> cell) {
  double a = 1.0;
  double b = 0.0;
  double magnitude = 1.0;
  bool coupled = false;
  for (const VertexSpec& spec : cell) {
    if (!spec.couples()) continue;
    coupled = true;
    const AbCoefficients ab = ab_coefficients(spec.angles, spec.mode);
    const double na = ab.a * a + ab.b * b;
    const double nb = ab.a * b + ab.b * a;
    const double scale = std::max(std::abs(na), std::abs(nb));
    a = na / scale;
    b = nb / scale;
    // Product of the per-vertex multipliers equals sqrt((a-b)/(a+b)) of the
    // product matrix (its eigenvalues are a+b and a-b).
    magnitude *= std::abs(folding_multiplier(spec.angles, spec.mode));
  }
  if (!coupled) {
    throw DegenerateMap("cell has no adjacent-crease vertex; the cell map is the identity");
  }

  CellMap map;
  map.a_eff = a;
  map.b_eff = b;
  map.branch_sign = sgn(apply_cell(cell, kBranchProbe));
  map.p_eff = map.branch_sign * magnitude;
  return map;
}

Orbit iterate(const StripDesign& design, double rho0, std::size_t cells) {
  if (std::abs(rho0) > kPi) throw DomainError("input fold angle outside [-180, 180] degrees");
  const std::size_t n_per_cell = design.period();
  if (!design.can_reach(cells * n_per_cell)) {
    throw DomainError("design has " + std::to_string(design.cell_count()) + " cells, " +
                      std::to_string(cells) + " requested");
  }
  Orbit orbit;
  orbit.rho_t.reserve(cells + 1);
  orbit.full_states.reserve(cells * n_per_cell);
  orbit.rho_t.push_back(rho0);
  double rho = rho0;
  for (std::size_t t = 0; t < cells; ++t) {
    for (std::size_t k = 0; k < n_per_cell; ++k) {
      const VertexSpec& spec = design.vertex(t * n_per_cell + k);
      const VertexState state = fold_angles(spec.angles, spec.mode, rho);
      orbit.full_states.push_back(state);
      rho = state.rho[spec.i_out];
    }
    orbit.rho_t.push_back(rho);
  }
  return orbit;
}

double sigmoid_value(double rho0, double p, long t) {
  if (!(std::abs(rho0) < kPi)) throw DomainError("sigmoid undefined at |rho0| = 180 degrees");
  if (p == 0.0 || !std::isfinite(p)) throw DomainError("multiplier must be nonzero and finite");
  const double magnitude =
      2.0 * std::atan(std::tan(0.5 * std::abs(rho0)) * std::pow(std::abs(p), static_cast<double>(t)));
  const int sign = (p < 0.0 && (t % 2 != 0)) ? -sgn(rho0) : sgn(rho0);
  return sign * magnitude;
}

double transition_width(double p) {
  if (p == 0.0 || !std::isfinite(p)) throw DomainError("multiplier must be nonzero and finite");
  if (std::abs(std::abs(p) - 1.0) <= kUnitTolerance) {
    throw UniformMap("|p| = 1: the map has no transition front");
  }
  return std::abs(2.0 * std::log(std::tan(kPi / 20.0)) / std::log(std::abs(p)));
}

Classification classify(const CellMap& map) {
  Classification c;
  c.p_eff = map.p_eff;
  const double magnitude = std::abs(map.p_eff);
  if (std::abs(magnitude - 1.0) <= kUnitTolerance) {
    c.kind = Propagation::Uniform;
    c.attracting = FixedPoint::None;
  } else {
    c.kind = Propagation::DominoLike;
    c.attracting = magnitude < 1.0 ? FixedPoint::Developed : FixedPoint::FlatFolded;
  }
  return c;
}

Classification classify(std::span<const VertexSpec> cell) {
  try {
    return classify(compose_cell(cell));
  } catch (const DegenerateMap&) {
    Classification c;
    c.kind = Propagation::Degenerate;
    c.p_eff = sgn(apply_cell(cell, kBranchProbe));
    return c;
  }
}

}  // namespace foldwave
