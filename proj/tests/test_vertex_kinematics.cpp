#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "foldwave/errors.hpp"
#include "foldwave/rotation.hpp"
#include "foldwave/vertex_kinematics.hpp"
#include "support/oracles.hpp"

namespace foldwave {
namespace {

TEST(SectorAngles, RejectsAnglesOutsideOpenInterval) {
  EXPECT_THROW(SectorAngles::from_degrees(0.0, 60.0), DomainError);
  EXPECT_THROW(SectorAngles::from_degrees(120.0, 180.0), DomainError);
  EXPECT_NO_THROW(SectorAngles::from_degrees(1e-3, 179.999));
}

TEST(SectorAngles, DerivedAnglesCloseTheVertex) {
  const auto s = SectorAngles::from_degrees(110.0, 70.0);
  EXPECT_DOUBLE_EQ(s.theta0() + s.theta1() + s.theta2() + s.theta3(), 2.0 * kPi);
  EXPECT_NEAR(s.theta0() - s.theta1() + s.theta2() - s.theta3(), 0.0, 1e-15);
}

TEST(FoldMode, OnlyPlusMinusOne) {
  EXPECT_THROW(FoldMode(0), DomainError);
  EXPECT_THROW(FoldMode(2), DomainError);
  EXPECT_EQ(FoldMode::same().sigma(), 1);
  EXPECT_EQ(FoldMode::opposite().sigma(), -1);
}

TEST(Singularity, DetectsBothSingularPairs) {
  EXPECT_TRUE(is_singular(SectorAngles::from_degrees(70, 70), FoldMode::opposite()));
  EXPECT_FALSE(is_singular(SectorAngles::from_degrees(70, 70), FoldMode::same()));
  EXPECT_TRUE(is_singular(SectorAngles::from_degrees(120, 60), FoldMode::same()));
  EXPECT_FALSE(is_singular(SectorAngles::from_degrees(120, 60), FoldMode::opposite()));
  EXPECT_THROW(fold_angles(SectorAngles::from_degrees(70, 70), FoldMode::opposite(), 0.3),
               SingularVertex);
}

TEST(FoldAngles, KnownValue) {
  // tan(rho1/2) = 2 tan(pi/4) for (120, 60), sigma = -1.
  const VertexState s =
      fold_angles(SectorAngles::from_degrees(120, 60), FoldMode::opposite(), kPi / 2);
  EXPECT_NEAR(s.rho[1], 2.214297435588181, 1e-14);
  EXPECT_DOUBLE_EQ(s.rho[2], -kPi / 2);
  EXPECT_DOUBLE_EQ(s.rho[3], s.rho[1]);
}

TEST(FoldAngles, EndpointsAreFixed) {
  const auto angles = SectorAngles::from_degrees(148.75, 60);
  for (int sigma : {1, -1}) {
    const FoldMode mode(sigma);
    EXPECT_EQ(fold_angles(angles, mode, 0.0).rho[1], 0.0);
    EXPECT_EQ(std::abs(fold_angles(angles, mode, kPi).rho[1]), kPi);
    EXPECT_EQ(std::abs(fold_angles(angles, mode, -kPi).rho[1]), kPi);
  }
  EXPECT_THROW(fold_angles(angles, FoldMode::same(), 3.2), DomainError);
}

TEST(FoldAngles, OppositeCreasesFollowMode) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const auto v = oracle::random_vertex(rng);
    const double rho0 = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
    const VertexState s =
        fold_angles(SectorAngles::from_radians(v.theta0, v.theta1), FoldMode(v.sigma), rho0);
    EXPECT_EQ(s.rho[2], v.sigma * rho0);
    EXPECT_EQ(s.rho[3], -v.sigma * s.rho[1]);
  }
}

TEST(FoldAngles, MatchesClosureOracle) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> rho(0.05 * kPi, 0.95 * kPi);
  std::bernoulli_distribution coin(0.5);
  for (int k = 0; k < 150; ++k) {
    const auto v = oracle::random_vertex(rng);
    const double rho0 = (coin(rng) ? 1.0 : -1.0) * rho(rng);
    const auto expected = oracle::closure_rho1(v.theta0, v.theta1, v.sigma, rho0);
    ASSERT_TRUE(expected.has_value());
    const double got =
        fold_angles(SectorAngles::from_radians(v.theta0, v.theta1), FoldMode(v.sigma), rho0).rho[1];
    EXPECT_NEAR(got, *expected, 1e-8) << v.theta0 << " " << v.theta1 << " " << v.sigma;
  }
}

TEST(FoldAngles, LoopClosesForRandomInputs) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rho(-kPi, kPi);
  for (int k = 0; k < 500; ++k) {
    const auto v = oracle::random_vertex(rng, 1e-3);
    const auto angles = SectorAngles::from_radians(v.theta0, v.theta1);
    EXPECT_LT(closure_residual(angles, fold_angles(angles, FoldMode(v.sigma), rho(rng))), 1e-12);
  }
}

TEST(FoldingMultiplier, MatchesSlopeOracle) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto v = oracle::random_vertex(rng, 0.1);
    const auto angles = SectorAngles::from_radians(v.theta0, v.theta1);
    const FoldMode mode(v.sigma);
    const auto f = [&](double r) { return fold_angles(angles, mode, r).rho[1]; };
    const double p = folding_multiplier(angles, mode);
    EXPECT_NEAR(oracle::slope_at_zero(f), p, 1e-6 * std::max(1.0, std::abs(p)));
    EXPECT_NEAR(oracle::slope_at_pi(f) * std::abs(p), 1.0, 1e-6);
  }
}

TEST(FoldingMultiplier, FigureVertices) {
  EXPECT_NEAR(std::abs(folding_multiplier(SectorAngles::from_degrees(150, 90), FoldMode(-1))),
              std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(std::abs(folding_multiplier(SectorAngles::from_degrees(90, 30), FoldMode(-1))),
              std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(std::abs(folding_multiplier(SectorAngles::from_degrees(120, 60), FoldMode(-1))), 2.0,
              1e-14);
}

TEST(AbCoefficients, MultiplierIdentity) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const auto v = oracle::random_vertex(rng);
    const auto angles = SectorAngles::from_radians(v.theta0, v.theta1);
    const AbCoefficients ab = ab_coefficients(angles, FoldMode(v.sigma));
    const double p = folding_multiplier(angles, FoldMode(v.sigma));
    EXPECT_NEAR(p * p, (ab.a - ab.b) / (ab.a + ab.b), 1e-9 * std::max(1.0, p * p));
  }
}

TEST(Rotation, RejectsNonUnitAxis) {
  EXPECT_THROW(rotation(0.3, Vec3(1.0, 1.0, 0.0)), DomainError);
  const Vec3 v = rotation(kPi / 2, Vec3::UnitZ()) * Vec3::UnitX();
  EXPECT_NEAR((v - Vec3::UnitY()).norm(), 0.0, 1e-15);
}

TEST(Rotation, SignedAngleAndPlanarRotation) {
  EXPECT_NEAR(signed_angle(Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()), kPi / 2, 1e-15);
  EXPECT_NEAR(signed_angle(Vec3::UnitX(), Vec3::UnitY(), -Vec3::UnitZ()), -kPi / 2, 1e-15);
  EXPECT_NEAR((rotate2d(kPi / 2, Vec2::UnitX()) - Vec2::UnitY()).norm(), 0.0, 1e-15);
}

}  // namespace
}  // namespace foldwave
