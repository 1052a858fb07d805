#pragma once

// Closed-form kinematics of a developable, flat-foldable degree-4 vertex.
//
// Creases are labelled 0..3 counterclockwise; sector angle i sits between
// creases i and i+1. Developability and flat-foldability leave two free
// sector angles: theta2 = pi - theta0 and theta3 = pi - theta1.
// Fold angles are positive for valley folds and negative for mountain folds.

#include <array>

#include "foldwave/angles.hpp"

namespace foldwave {

/// Singular-pair tolerance (rad).
inline constexpr double kSingularTolerance = 1e-9;
/// Window in which an arccos argument is treated as rounding noise.
inline constexpr double kArccosWindow = 1e-9;

class SectorAngles {
 public:
  /// Throws DomainError unless both angles lie in (0, pi).
  static SectorAngles from_radians(double theta0, double theta1);
  static SectorAngles from_degrees(double theta0_deg, double theta1_deg);

  double theta0() const { return theta0_; }
  double theta1() const { return theta1_; }
  double theta2() const { return kPi - theta0_; }
  double theta3() const { return kPi - theta1_; }
  std::array<double, 4> all() const {
    return {theta0(), theta1(), theta2(), theta3()};
  }

  friend bool operator==(const SectorAngles&, const SectorAngles&) = default;

 private:
  SectorAngles(double theta0, double theta1) : theta0_(theta0), theta1_(theta1) {}

  double theta0_;
  double theta1_;
};

/// Folding mode sigma = sgn(rho0) sgn(rho2).
class FoldMode {
 public:
  /// Throws DomainError unless sigma is -1 or +1.
  explicit FoldMode(int sigma);

  static FoldMode same() { return FoldMode(1); }
  static FoldMode opposite() { return FoldMode(-1); }

  int sigma() const { return sigma_; }

  friend bool operator==(FoldMode, FoldMode) = default;

 private:
  int sigma_;
};

struct VertexState {
  std::array<double, 4> rho{};
};

struct AbCoefficients {
  double a = 0.0;
  double b = 0.0;

  double ratio() const { return a / b; }
};

/// True for (theta0 = theta1, sigma = -1) and (theta0 + theta1 = pi, sigma = +1).
bool is_singular(const SectorAngles& angles, FoldMode mode);

/// A = cos theta0 cos theta1 + sigma, B = sin theta0 sin theta1.
AbCoefficients ab_coefficients(const SectorAngles& angles, FoldMode mode);

/// Sign of cos theta0 + sigma cos theta1, the branch selector of rho1.
int branch_factor(const SectorAngles& angles, FoldMode mode);

/// All four fold angles for input fold angle rho0.
///
/// The magnitude of rho1 is evaluated through the tangent half-angle form
/// tan(|rho1|/2) = |p| tan(|rho0|/2), which equals the arccos form exactly but
/// keeps full precision next to the flat-folded state. The arccos argument is
/// still checked against [-1, 1] with a 1e-9 window.
///
/// Throws SingularVertex for a singular pair and DomainError for |rho0| > pi.
VertexState fold_angles(const SectorAngles& angles, FoldMode mode, double rho0);

/// Signed folding multiplier p = -sgn(cos theta0 + sigma cos theta1) sqrt((A-B)/(A+B)).
/// |p| is the slope |d rho1 / d rho0| at the developed state.
double folding_multiplier(const SectorAngles& angles, FoldMode mode);

/// Runs the crease/normal rotation recursion once around the vertex from the
/// seed frame c0 = +x, n0 = +z and returns |c4 - c0| + |n4 - n0|. Zero iff the
/// fold angles are compatible with the sector angles.
double closure_residual(const SectorAngles& angles, const VertexState& state);

}  // namespace foldwave
