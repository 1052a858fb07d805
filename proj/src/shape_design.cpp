#include "foldwave/shape_design.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "foldwave/embedding.hpp"
#include "foldwave/errors.hpp"

namespace foldwave {

namespace {

constexpr double kUniformTolerance = 1e-6;
constexpr double kArcWindow = 1e-9;
constexpr double kRatioTolerance = 1e-10;
constexpr double kTurningZero = 1e-12;

// Accepts arccos arguments up to kArcWindow outside [-1, 1].
bool clamp_cosine(double& x) {
  if (!(std::abs(x) <= 1.0 + kArcWindow)) return false;
  x = std::clamp(x, -1.0, 1.0);
  return true;
}

double cross2(const Vec2& u, const Vec2& v) { return u.x() * v.y() - u.y() * v.x(); }

// Turning angle from u to v.
double turn(const Vec2& u, const Vec2& v) { return std::atan2(cross2(u, v), u.dot(v)); }

// Sums of sector angles given in degrees do not reduce to exact multiples of
// 2 pi in floating point; residues below kTurningZero are reported as zero.
double reduce_turning(double sum) {
  const double r = wrap_angle(sum);
  return std::abs(r) < kTurningZero ? 0.0 : r;
}

}  // namespace

TurningAngles turning_angles(const StripDesign& design) {
  if (!design.periodic()) throw NotPeriodic("turning angles need a periodic design");
  double developed = 0.0;
  double flat = 0.0;
  int parity_offset = 0;
  for (const VertexSpec& spec : design.cell(0)) {
    const auto theta = spec.angles.all();
    developed += kPi;
    flat += kPi;
    for (int i = 1; i <= spec.i_out; ++i) {
      developed += theta[i - 1];
      flat += ((i + parity_offset) % 2 == 0 ? 1.0 : -1.0) * theta[i - 1];
    }
    parity_offset += spec.i_out - 1;
  }
  return {reduce_turning(developed), reduce_turning(flat)};
}

SectorAngles solve_sector_for_ratio(double theta_fixed, int fixed_index, FoldMode mode,
                                    double ratio, std::optional<int> branch) {
  if (!(theta_fixed > 0.0 && theta_fixed < kPi)) {
    throw DomainError("fixed sector angle must lie strictly between 0 and 180 degrees");
  }
  if (fixed_index != 0 && fixed_index != 1) throw DomainError("fixed index must be 0 or 1");
  if (!std::isfinite(ratio)) throw NoSolution("ratio A/B must be finite");

  // cos(fixed) cos x - ratio sin(fixed) sin x = -sigma, i.e.
  // amplitude * cos(x - phase) = -sigma.
  const double alpha = std::cos(theta_fixed);
  const double beta = -ratio * std::sin(theta_fixed);
  const double amplitude = std::hypot(alpha, beta);
  const double phase = std::atan2(beta, alpha);
  double c = -mode.sigma() / amplitude;
  if (!clamp_cosine(c)) {
    throw NoSolution("no sector angle reaches A/B = " + std::to_string(ratio));
  }

  auto make = [&](double x) {
    return fixed_index == 0 ? SectorAngles::from_radians(theta_fixed, x)
                            : SectorAngles::from_radians(x, theta_fixed);
  };

  std::vector<double> roots;
  for (double s : {1.0, -1.0}) {
    const double x = wrap_angle(phase + s * std::acos(c));
    if (x > 0.0 && x < kPi &&
        std::none_of(roots.begin(), roots.end(), [&](double r) { return std::abs(r - x) < 1e-15; })) {
      roots.push_back(x);
    }
  }
  if (roots.empty()) {
    throw NoSolution("no sector angle in (0, 180) degrees reaches A/B = " + std::to_string(ratio));
  }
  std::sort(roots.begin(), roots.end());

  if (branch) {
    std::erase_if(roots, [&](double x) { return branch_factor(make(x), mode) != *branch; });
    if (roots.empty()) {
      throw NoSolution("no sector angle reaches A/B = " + std::to_string(ratio) +
                       " on the requested branch");
    }
  }
  const auto nonsingular =
      std::find_if(roots.begin(), roots.end(), [&](double x) { return !is_singular(make(x), mode); });
  if (nonsingular == roots.end()) {
    throw SingularResult("every sector angle reaching A/B = " + std::to_string(ratio) +
                         " is singular");
  }

  const SectorAngles result = make(*nonsingular);
  const AbCoefficients ab = ab_coefficients(result, mode);
  if (!(std::abs(ab.ratio() - ratio) < kRatioTolerance)) {
    throw NoSolution("solved sector angle misses A/B = " + std::to_string(ratio) + " by " +
                     std::to_string(std::abs(ab.ratio() - ratio)));
  }
  return result;
}

Vec2 PolylinePlan::entry() const { return 2.0 * points.front() - centers.front(); }

Vec2 PolylinePlan::exit() const { return 2.0 * points.back() - centers.back(); }

PolylinePlan map_polyline(std::span<const Vec2> points, double crease_length, double phi_star,
                          double phi_initial, PlanVariant variant) {
  if (points.size() < 2) throw NonUniformPolyline("polyline needs at least two points");
  const std::size_t segments = points.size() - 1;

  PolylinePlan plan;
  plan.points.assign(points.begin(), points.end());
  plan.crease_length = crease_length;
  plan.phi_star = phi_star;
  plan.phi_initial = phi_initial;
  plan.variant = variant;

  const double L = (points[1] - points[0]).norm();
  if (!(L > 0.0)) throw NonUniformPolyline("polyline has a zero-length segment");
  plan.segment_length = L;
  for (std::size_t t = 0; t < segments; ++t) {
    const Vec2 d = points[t + 1] - points[t];
    const double len = d.norm();
    if (std::abs(len - L) > kUniformTolerance * L) {
      throw NonUniformPolyline("segment " + std::to_string(t) + " has length " +
                               std::to_string(len) + ", expected " + std::to_string(L));
    }
    plan.directions.push_back(d / len);
  }
  plan.directions.push_back(plan.directions.back());

  const double l = crease_length;
  if (!(l > 0.0) || l > L / 3.0 * (1.0 + 1e-12)) {
    throw GeometryInfeasible(0, "crease length " + std::to_string(l) +
                                    " must be positive and at most L/3 = " +
                                    std::to_string(L / 3.0));
  }

  plan.phi.resize(segments + 1);
  plan.phi[0] = phi_initial;
  for (std::size_t t = 1; t <= segments; ++t) {
    plan.phi[t] = phi_star + 0.5 * turn(plan.directions[t - 1], plan.directions[t]);
  }

  const double rotation_sign = variant == PlanVariant::Reversed ? -1.0 : 1.0;
  for (std::size_t t = 0; t < segments; ++t) {
    const Vec2 o0 = points[t] + 0.5 * l * rotate2d(plan.phi[t], plan.directions[t]);
    const Vec2 o3 = points[t + 1] - 0.5 * l * rotate2d(plan.phi[t + 1], plan.directions[t + 1]);
    const double chord = (o3 - o0).norm();
    if (!(chord > 0.0)) throw GeometryInfeasible(t, "cell chord has zero length");
    const double half = 0.5 * chord;

    // Point symmetry of the chain: o1 and o2 are mirror images through the
    // chord midpoint, so triangle (o0, o1, midpoint) has sides l, D/2, l/2.
    double cos_psi = (l * l + half * half - 0.25 * l * l) / (2.0 * l * half);
    if (!clamp_cosine(cos_psi)) {
      throw GeometryInfeasible(t, "chord " + std::to_string(chord) +
                                      " cannot be spanned by three creases of length " +
                                      std::to_string(l));
    }
    const double psi = std::acos(cos_psi);

    // Rotation at o3 that closes the chain, from triangles (o0, o1, o3) and
    // (o3, o1, o2).
    const double a = std::sqrt(std::max(0.0, l * l + chord * chord - 2.0 * l * chord * cos_psi));
    if (!(a > 0.0)) throw GeometryInfeasible(t, "chain folds back onto its chord");
    double cos_alpha = a / (2.0 * l);
    double cos_beta = (a * a + chord * chord - l * l) / (2.0 * a * chord);
    if (!clamp_cosine(cos_alpha) || !clamp_cosine(cos_beta)) {
      throw GeometryInfeasible(t, "closing triangle is not realizable");
    }
    double cos_psi_bar = cos_alpha * cos_beta + std::sqrt(1.0 - cos_alpha * cos_alpha) *
                                                   std::sqrt(1.0 - cos_beta * cos_beta);
    if (!clamp_cosine(cos_psi_bar)) throw GeometryInfeasible(t, "closing angle out of range");
    const double psi_bar = std::acos(cos_psi_bar);
    if (std::abs(psi - psi_bar) > 1e-9) {
      throw GeometryInfeasible(t, "in-cell rotations are not symmetric");
    }

    const Vec2 forward = (o3 - o0) / chord;
    const Vec2 o1 = o0 + l * rotate2d(rotation_sign * psi, forward);
    const Vec2 o2 = o3 + l * rotate2d(rotation_sign * psi_bar, Vec2(-forward));

    plan.psi.push_back(psi);
    plan.psi_bar.push_back(psi_bar);
    plan.aux.push_back(a);
    plan.chord.push_back(chord);
    plan.centers.insert(plan.centers.end(), {o0, o1, o2, o3});
  }
  return plan;
}

std::vector<double> interior_angles(const PolylinePlan& plan) {
  const std::size_t count = plan.centers.size();
  std::vector<double> angles(count);
  for (std::size_t n = 0; n < count; ++n) {
    const Vec2 prev = n > 0 ? plan.centers[n - 1] : plan.entry();
    const Vec2 next = n + 1 < count ? plan.centers[n + 1] : plan.exit();
    const Vec2 o = plan.centers[n];
    double a = turn(prev - o, next - o);
    if (a < 0.0) a += 2.0 * kPi;
    angles[n] = a;
  }
  return angles;
}

double template_ratio(const StripDesign& template_design) {
  for (const VertexSpec& spec : template_design.vertices()) {
    if (spec.couples()) return ab_coefficients(spec.angles, spec.mode).ratio();
  }
  throw InvalidDesign("template has no adjacent-crease vertex to take A/B from");
}

StripDesign polyline_to_strip(const PolylinePlan& plan, const StripDesign& template_design,
                              double ratio) {
  if (template_design.period() != 4) {
    throw InvalidDesign("template period must be 4 (four vertex centers per segment)");
  }
  const std::vector<double> interior = interior_angles(plan);
  std::vector<VertexSpec> vertices;
  vertices.reserve(interior.size());

  for (std::size_t n = 0; n < interior.size(); ++n) {
    const std::size_t cell = n / 4;
    const VertexSpec& pattern = template_design.vertices()[n % 4];
    const double angle = interior[n];
    auto infeasible = [&](const std::string& why) {
      return GeometryInfeasible(cell, "vertex " + std::to_string(n) + ": " + why);
    };

    try {
      switch (pattern.i_out) {
        case 1: {
          if (!(angle > 0.0 && angle < kPi)) {
            throw infeasible("interior angle " + std::to_string(rad_to_deg(angle)) +
                             " deg is not a valid theta0");
          }
          const SectorAngles angles = solve_sector_for_ratio(
              angle, 0, pattern.mode, ratio, branch_factor(pattern.angles, pattern.mode));
          vertices.push_back(make_vertex(angles, pattern.mode, 1));
          break;
        }
        case 3: {
          const double theta1 = angle - kPi;
          if (!(theta1 > 0.0 && theta1 < kPi)) {
            throw infeasible("interior angle " + std::to_string(rad_to_deg(angle)) +
                             " deg does not leave a valid theta1");
          }
          const SectorAngles angles = solve_sector_for_ratio(
              theta1, 1, pattern.mode, ratio, branch_factor(pattern.angles, pattern.mode));
          vertices.push_back(make_vertex(angles, pattern.mode, 3));
          break;
        }
        default: {
          const SectorAngles angles = SectorAngles::from_radians(0.5 * angle, 0.5 * angle);
          vertices.push_back(make_vertex(angles, pattern.mode, 2));
          break;
        }
      }
    } catch (const NoSolution& e) {
      throw NoSolution("cell " + std::to_string(cell) + ", vertex " + std::to_string(n) + ": " +
                       e.what());
    } catch (const SingularResult& e) {
      throw SingularResult("cell " + std::to_string(cell) + ", vertex " + std::to_string(n) +
                           ": " + e.what());
    } catch (const DomainError& e) {
      throw infeasible(e.what());
    }
  }

  const double l = plan.crease_length;
  std::vector<CreaseLengths> lengths(vertices.size(), CreaseLengths{l, l, l, l});
  return StripDesign(std::move(vertices), false, 4, std::move(lengths));
}

double plan_deviation(const PolylinePlan& plan, const StripDesign& design) {
  if (design.size() != plan.centers.size()) {
    throw InvalidDesign("design has " + std::to_string(design.size()) + " vertices, plan has " +
                        std::to_string(plan.centers.size()));
  }
  auto lift = [](const Vec2& p) { return Vec3(p.x(), p.y(), 0.0); };
  Frame seed;
  seed.origin = lift(plan.centers.front());
  seed.crease = (lift(plan.entry()) - seed.origin).normalized();
  const StripConfiguration config = propagate(design, 0.0, design.cell_count(), seed);

  double worst = 0.0;
  for (std::size_t n = 0; n < config.poses.size(); ++n) {
    worst = std::max(worst, (config.poses[n].origin - lift(plan.centers[n])).norm());
  }
  const Pose& last = config.poses.back();
  const int out = config.i_out.back();
  const Vec3 end = last.origin + config.lengths.back()[out] * last.creases[out];
  return std::max(worst, (end - lift(plan.exit())).norm());
}

}  // namespace foldwave
