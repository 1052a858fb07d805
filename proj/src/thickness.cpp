#include "foldwave/thickness.hpp"

#include <cmath>
#include <string>

#include "foldwave/errors.hpp"

namespace foldwave {

namespace {
constexpr double kMirrorTolerance = 1e-9;
}

BennettOffsets bennett_offsets(const SectorAngles& angles, double d0) {
  if (!(d0 > 0.0) || !std::isfinite(d0)) throw DomainError("offset d0 must be positive");
  const double d1 = d0 * std::sin(angles.theta1()) / std::sin(angles.theta0());
  return {{d0, d1, d0, d1}};
}

ThicknessProfile thickness_profile(const StripDesign& design, double d0, std::size_t cells) {
  if (!(d0 > 0.0) || !std::isfinite(d0)) throw DomainError("offset d0 must be positive");
  const std::size_t period = design.period();
  if (!design.can_reach(cells * period)) {
    throw DomainError("design has " + std::to_string(design.cell_count()) + " cells, " +
                      std::to_string(cells) + " requested");
  }

  ThicknessProfile profile;
  profile.offsets.reserve(cells * period);
  double carried = d0;
  for (std::size_t t = 0; t < cells; ++t) {
    const double cell_start = carried;
    for (std::size_t k = 0; k < period; ++k) {
      const VertexSpec& spec = design.vertex(t * period + k);
      const BennettOffsets offsets = bennett_offsets(spec.angles, carried);
      profile.offsets.push_back(offsets);
      carried = offsets.d[spec.i_out];
    }
    const double ratio = carried / cell_start;
    profile.cell_ratio.push_back(ratio);
    if (std::abs(ratio - 1.0) > kThicknessUnitTolerance) profile.exponential = true;
  }
  return profile;
}

ThicknessProfile thickness_profile(const StripDesign& design, double d0) {
  return thickness_profile(design, d0, design.cell_count());
}

PanelInsertion can_insert_rectangular_panels(const StripDesign& design) {
  PanelInsertion result;
  for (std::size_t n = 1; n < design.size(); n += 2) {
    const VertexSpec& spec = design.vertices()[n];
    if (spec.i_out != 2) {
      throw WrongConnectivity("vertex " + std::to_string(n) +
                              " must connect opposite creases (i_out = 2), has i_out = " +
                              std::to_string(spec.i_out));
    }
    if (std::abs(spec.angles.theta0() - spec.angles.theta1()) > kMirrorTolerance) {
      result.offending.push_back(n);
    }
  }
  result.feasible = result.offending.empty();
  return result;
}

}  // namespace foldwave
