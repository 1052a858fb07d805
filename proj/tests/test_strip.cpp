#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "foldwave/errors.hpp"
#include "foldwave/strip_dynamics.hpp"
#include "support/oracles.hpp"

namespace foldwave {
namespace {

using oracle::load_design;

TEST(StripDesign, Validation) {
  const VertexSpec a = make_vertex_deg(120, 60, -1, 1);
  const VertexSpec b = make_vertex_deg(60, 60, 1, 2);
  EXPECT_THROW(StripDesign({}, true, 1), InvalidDesign);
  EXPECT_THROW(StripDesign({a, b, a}, true, 2), InvalidDesign);
  EXPECT_THROW(StripDesign({a, b}, true, 1), InvalidDesign);  // not periodic with period 1
  EXPECT_THROW(make_vertex_deg(120, 60, -1, 4), InvalidDesign);
  EXPECT_THROW(make_vertex_deg(70, 70, -1, 1), SingularVertex);
  EXPECT_NO_THROW(make_vertex_deg(70, 70, -1, 2));
  // Output crease of vertex 0 has length 2, input of vertex 1 has length 1.
  EXPECT_THROW(StripDesign({a, b}, false, 2, {{1, 2, 1, 1}, {1, 1, 1, 1}}), InvalidDesign);
  EXPECT_NO_THROW(StripDesign({a, b}, false, 2, {{1, 2, 1, 1}, {2, 1, 1, 1}}));
}

TEST(StripDesign, PeriodicWraps) {
  const StripDesign d = load_design("fig3d");
  EXPECT_EQ(d.vertex(5), d.vertex(1));
  EXPECT_EQ(d.cell(7).size(), 2u);
  EXPECT_TRUE(d.can_reach(1000));
}

TEST(StripDesign, NonPeriodicStopsAtEnd) {
  const StripDesign d({make_vertex_deg(120, 60, -1, 1)}, false, 1);
  EXPECT_THROW(d.cell(1), DomainError);
  EXPECT_THROW(iterate(d, 0.5, 2), DomainError);
}

TEST(CellMap, FigureMultipliers) {
  EXPECT_NEAR(compose_cell(load_design("fig3a").cell(0)).p_eff, 0.347334802, 1e-9);
  EXPECT_NEAR(std::abs(compose_cell(load_design("fig3d").cell(0)).p_eff), 3.0, 1e-12);
  EXPECT_NEAR(std::abs(compose_cell(load_design("fig3e").cell(0)).p_eff), 4.0, 1e-12);
  EXPECT_NEAR(std::abs(compose_cell(load_design("fig3f").cell(0)).p_eff), 4.0, 1e-12);
  EXPECT_NEAR(std::abs(compose_cell(load_design("fig3c").cell(0)).p_eff), 1.0, 1e-12);
  EXPECT_THROW(compose_cell(load_design("fig3b").cell(0)), DegenerateMap);
}

TEST(CellMap, AgreesWithSequentialComposition) {
  for (const char* stem : {"fig3a", "fig3c", "fig3d", "fig3e", "fig3f", "fig4b"}) {
    const StripDesign d = load_design(stem);
    const CellMap map = compose_cell(d.cell(0));
    for (double rho = -kPi; rho <= kPi; rho += 0.01) {
      EXPECT_NEAR(map(rho), apply_cell(d.cell(0), rho), 1e-12) << stem << " " << rho;
    }
  }
}

TEST(CellMap, FixedPoints) {
  for (const char* stem : {"fig3a", "fig3b", "fig3c", "fig3d", "fig3e", "fig3f", "fig4b"}) {
    const StripDesign d = load_design(stem);
    EXPECT_EQ(apply_cell(d.cell(0), 0.0), 0.0);
    EXPECT_EQ(std::abs(apply_cell(d.cell(0), kPi)), kPi);
    EXPECT_EQ(std::abs(apply_cell(d.cell(0), -kPi)), kPi);
  }
}

TEST(Classification, Figures) {
  EXPECT_EQ(classify(load_design("fig3b").cell(0)).kind, Propagation::Degenerate);
  EXPECT_EQ(classify(load_design("fig3c").cell(0)).kind, Propagation::Uniform);
  for (const char* stem : {"fig3a", "fig3d", "fig3e", "fig3f", "fig4b"}) {
    EXPECT_EQ(classify(load_design(stem).cell(0)).kind, Propagation::DominoLike) << stem;
  }
  EXPECT_EQ(classify(load_design("fig3a").cell(0)).attracting, FixedPoint::Developed);
  EXPECT_EQ(classify(load_design("fig3f").cell(0)).attracting, FixedPoint::FlatFolded);
  EXPECT_TRUE(classify(load_design("fig3c").cell(0)).deploys_uniformly());
}

TEST(Orbit, BoundaryValuesFollowSigmoid) {
  for (const char* stem : {"fig3a", "fig3d", "fig3e", "fig3f", "fig4b"}) {
    const StripDesign d = load_design(stem);
    const double p = compose_cell(d.cell(0)).p_eff;
    for (double rho0 : {0.3, -1.2, 2.8}) {
      const Orbit orbit = iterate(d, rho0, 15);
      ASSERT_EQ(orbit.rho_t.size(), 16u);
      for (std::size_t t = 0; t < orbit.rho_t.size(); ++t) {
        EXPECT_NEAR(orbit.rho_t[t], sigmoid_value(rho0, p, static_cast<long>(t)), 1e-9)
            << stem << " t=" << t;
      }
    }
  }
}

TEST(Orbit, StoresEveryVertexState) {
  const Orbit orbit = iterate(load_design("fig3f"), 0.4, 3);
  EXPECT_EQ(orbit.full_states.size(), 12u);
  EXPECT_EQ(orbit.full_states[4].rho[0], orbit.rho_t[1]);
}

TEST(Sigmoid, Domain) {
  EXPECT_THROW(sigmoid_value(kPi, 2.0, 1), DomainError);
  EXPECT_THROW(sigmoid_value(0.3, 0.0, 1), DomainError);
  EXPECT_DOUBLE_EQ(sigmoid_value(0.3, -2.0, 0), 0.3);
  EXPECT_LT(sigmoid_value(0.3, -2.0, 1), 0.0);
}

TEST(TransitionWidth, FormulaAndOracle) {
  EXPECT_THROW(transition_width(1.0), UniformMap);
  const StripDesign d = load_design("fig3a");
  const CellMap map = compose_cell(d.cell(0));
  const double w = transition_width(map.p_eff);
  EXPECT_NEAR(w, 3.485, 1e-3);
  const int counted = oracle::counted_width([&](double r) { return apply_cell(d.cell(0), r); },
                                            std::abs(map.p_eff));
  EXPECT_LE(std::abs(counted - w), 1.0);
}

TEST(CellMap, RandomCellsProductOfSlopes) {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 50; ++k) {
    std::vector<VertexSpec> cell;
    for (int i_out : {1, 2, 3, 2}) {
      const auto v = oracle::random_vertex(rng, 0.15);
      cell.push_back(make_vertex(SectorAngles::from_radians(v.theta0, v.theta1), FoldMode(v.sigma),
                                 i_out));
    }
    const CellMap map = compose_cell(cell);
    const auto f = [&](double r) { return apply_cell(cell, r); };
    EXPECT_NEAR(oracle::slope_at_zero(f), map.p_eff, 1e-5 * std::max(1.0, std::abs(map.p_eff)));
    EXPECT_NEAR(oracle::slope_at_zero(f) * oracle::slope_at_pi(f) * sgn(map.p_eff), 1.0, 1e-5);
  }
}

}  // namespace
}  // namespace foldwave
