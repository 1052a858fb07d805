#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "foldwave/errors.hpp"
#include "foldwave/thickness.hpp"
#include "support/oracles.hpp"

namespace foldwave {
namespace {

using oracle::load_design;

TEST(BennettOffsets, TableValues) {
  const auto a = bennett_offsets(SectorAngles::from_degrees(70, 70), 1.0).d;
  for (double d : a) EXPECT_NEAR(d, 1.0, 1e-15);
  const auto b = bennett_offsets(SectorAngles::from_degrees(120, 60), 1.0).d;
  for (double d : b) EXPECT_NEAR(d, 1.0, 1e-15);
  const auto c = bennett_offsets(SectorAngles::from_degrees(90, 30), 2.0).d;
  EXPECT_NEAR(c[0], 2.0, 1e-15);
  EXPECT_NEAR(c[1], 1.0, 1e-15);
  EXPECT_NEAR(c[2], 2.0, 1e-15);
  EXPECT_NEAR(c[3], 1.0, 1e-15);
  EXPECT_THROW(bennett_offsets(SectorAngles::from_degrees(90, 30), 0.0), DomainError);
}

TEST(BennettOffsets, RandomRatioIdentities) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> d0(0.1, 5.0);
  for (int k = 0; k < 500; ++k) {
    const auto v = oracle::random_vertex(rng);
    const auto angles = SectorAngles::from_radians(v.theta0, v.theta1);
    const double base = d0(rng);
    const auto d = bennett_offsets(angles, base).d;
    for (double x : d) EXPECT_GT(x, 0.0);
    EXPECT_NEAR(d[1] / d[0], std::sin(v.theta1) / std::sin(v.theta0), 1e-12);
    EXPECT_EQ(d[2], d[0]);
    EXPECT_EQ(d[3], d[1]);
  }
}

TEST(ThicknessProfile, UniformAndGeometric) {
  EXPECT_FALSE(thickness_profile(load_design("fig3b"), 1.0, 5).exponential);
  EXPECT_FALSE(thickness_profile(load_design("fig3f"), 1.0, 5).exponential);

  const StripDesign halving({make_vertex_deg(90, 30, -1, 1)}, true, 1);
  const ThicknessProfile p = thickness_profile(halving, 1.0, 6);
  EXPECT_TRUE(p.exponential);
  for (std::size_t n = 0; n < p.offsets.size(); ++n) {
    EXPECT_NEAR(p.offsets[n].d[0], std::pow(0.5, static_cast<double>(n)), 1e-15);
  }
  for (double r : p.cell_ratio) EXPECT_NEAR(r, 0.5, 1e-15);
}

TEST(ThicknessProfile, PeriodicDesignsAreExactlyGeometric) {
  std::mt19937_64 rng(44);
  for (int k = 0; k < 50; ++k) {
    std::vector<VertexSpec> cell;
    for (int i_out : {1, 2, 3, 2}) {
      const auto v = oracle::random_vertex(rng, 0.2);
      cell.push_back(make_vertex(SectorAngles::from_radians(v.theta0, v.theta1), FoldMode(v.sigma),
                                 i_out));
    }
    const StripDesign d(cell, true, 4);
    const ThicknessProfile p = thickness_profile(d, 1.0, 6);
    for (std::size_t n = 0; n + 4 < p.offsets.size(); ++n) {
      const double r = p.offsets[n + 4].d[0] / p.offsets[n].d[0];
      EXPECT_NEAR(r / p.cell_ratio[0], 1.0, 1e-12);
    }
    // Each shared crease carries a single offset.
    for (std::size_t n = 0; n + 1 < p.offsets.size(); ++n) {
      EXPECT_EQ(p.offsets[n + 1].d[0], p.offsets[n].d[d.vertex(n).i_out]);
    }
  }
}

TEST(RectangularPanels, FigureDesigns) {
  EXPECT_TRUE(can_insert_rectangular_panels(load_design("fig3f")).feasible);
  EXPECT_TRUE(can_insert_rectangular_panels(load_design("fig4b")).feasible);
  EXPECT_THROW(can_insert_rectangular_panels(load_design("fig3d")), WrongConnectivity);

  const StripDesign f = load_design("fig3f");
  std::vector<VertexSpec> v(f.vertices().begin(), f.vertices().end());
  v[1] = make_vertex_deg(60, 61, 1, 2);
  const PanelInsertion r = can_insert_rectangular_panels(StripDesign(v, true, 4));
  EXPECT_FALSE(r.feasible);
  ASSERT_EQ(r.offending.size(), 1u);
  EXPECT_EQ(r.offending[0], 1u);
}

}  // namespace
}  // namespace foldwave
