#include "foldwave/strip_design.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "foldwave/errors.hpp"

namespace foldwave {

VertexSpec make_vertex(const SectorAngles& angles, FoldMode mode, int i_out) {
  if (i_out < 1 || i_out > 3) {
    throw InvalidDesign("output crease index must be 1, 2 or 3, got " + std::to_string(i_out));
  }
  if (i_out != 2 && is_singular(angles, mode)) {
    throw SingularVertex("adjacent-crease vertex (" + std::to_string(rad_to_deg(angles.theta0())) +
                         ", " + std::to_string(rad_to_deg(angles.theta1())) +
                         ") deg is singular for sigma = " + std::to_string(mode.sigma()));
  }
  return VertexSpec{angles, mode, i_out};
}

VertexSpec make_vertex_deg(double theta0_deg, double theta1_deg, int sigma, int i_out) {
  return make_vertex(SectorAngles::from_degrees(theta0_deg, theta1_deg), FoldMode(sigma), i_out);
}

namespace {

bool same_length(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

}  // namespace

StripDesign::StripDesign(std::vector<VertexSpec> vertices, bool periodic, std::size_t period,
                         std::vector<CreaseLengths> lengths)
    : vertices_(std::move(vertices)),
      periodic_(periodic),
      period_(period),
      lengths_(std::move(lengths)) {
  if (vertices_.empty()) throw InvalidDesign("design has no vertices");
  if (period_ == 0) throw InvalidDesign("period must be positive");
  if (vertices_.size() % period_ != 0) {
    throw InvalidDesign("vertex count " + std::to_string(vertices_.size()) +
                        " is not a multiple of the period " + std::to_string(period_));
  }
  if (lengths_.empty()) lengths_.assign(vertices_.size(), kUnitLengths);
  if (lengths_.size() != vertices_.size()) {
    throw InvalidDesign("expected " + std::to_string(vertices_.size()) +
                        " crease-length entries, got " + std::to_string(lengths_.size()));
  }
  for (std::size_t n = 0; n < lengths_.size(); ++n) {
    for (double l : lengths_[n]) {
      if (!(l > 0.0) || !std::isfinite(l)) {
        throw InvalidDesign("vertex " + std::to_string(n) + ": crease lengths must be positive");
      }
    }
  }
  if (periodic_) {
    for (std::size_t n = period_; n < vertices_.size(); ++n) {
      if (!(vertices_[n] == vertices_[n - period_])) {
        throw InvalidDesign("vertex " + std::to_string(n) + " breaks the declared period " +
                            std::to_string(period_));
      }
    }
  }
  const std::size_t links = periodic_ ? vertices_.size() : vertices_.size() - 1;
  for (std::size_t n = 0; n < links; ++n) {
    const std::size_t next = (n + 1) % vertices_.size();
    const double out = lengths_[n][vertices_[n].i_out];
    if (!same_length(lengths_[next][0], out)) {
      throw InvalidDesign("vertex " + std::to_string(next) + ": input crease length " +
                          std::to_string(lengths_[next][0]) +
                          " differs from the shared output crease length " + std::to_string(out));
    }
  }
}

const VertexSpec& StripDesign::vertex(std::size_t n) const {
  return vertices_[periodic_ ? n % vertices_.size() : n];
}

const CreaseLengths& StripDesign::lengths(std::size_t n) const {
  return lengths_[periodic_ ? n % lengths_.size() : n];
}

std::span<const VertexSpec> StripDesign::cell(std::size_t t) const {
  std::size_t start = t * period_;
  if (periodic_) {
    start %= vertices_.size();
  } else if (start + period_ > vertices_.size()) {
    throw DomainError("cell " + std::to_string(t) + " lies past the end of the strip (" +
                      std::to_string(cell_count()) + " cells)");
  }
  return std::span<const VertexSpec>(vertices_).subspan(start, period_);
}

bool approx_equal(const StripDesign& a, const StripDesign& b, double tol) {
  if (a.periodic() != b.periodic() || a.period() != b.period() || a.size() != b.size()) {
    return false;
  }
  for (std::size_t n = 0; n < a.size(); ++n) {
    const VertexSpec& u = a.vertices()[n];
    const VertexSpec& v = b.vertices()[n];
    if (u.i_out != v.i_out || !(u.mode == v.mode)) return false;
    if (std::abs(u.angles.theta0() - v.angles.theta0()) > tol) return false;
    if (std::abs(u.angles.theta1() - v.angles.theta1()) > tol) return false;
    for (int i = 0; i < 4; ++i) {
      const double x = a.lengths()[n][i];
      const double y = b.lengths()[n][i];
      if (std::abs(x - y) > tol * std::max(std::abs(x), std::abs(y))) return false;
    }
  }
  return true;
}

}  // namespace foldwave
