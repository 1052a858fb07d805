#include <sstream>

#include <gtest/gtest.h>

#include "foldwave/design_io.hpp"
#include "foldwave/errors.hpp"
#include "foldwave/format.hpp"
#include "support/oracles.hpp"

namespace foldwave {
namespace {

std::string error_of(const std::string& text) {
  try {
    parse_design(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

constexpr const char* kHeader = R"({"format": "foldwave-design", "version": 1, "periodic": true, )";

TEST(DesignFile, FieldAddressedErrors) {
  EXPECT_NE(error_of(std::string(kHeader) +
                     R"("period": 1, "vertices": [{"theta0_deg": 120, "theta1_deg": 60, "sigma": 0, "i_out": 1}]})")
                .find("vertices[0].sigma"),
            std::string::npos);
  EXPECT_NE(error_of(std::string(kHeader) +
                     R"("period": 2, "vertices": [{"theta0_deg": 120, "theta1_deg": 60, "sigma": -1, "i_out": 1},
                     {"theta0_deg": 200, "theta1_deg": 60, "sigma": -1, "i_out": 1}]})")
                .find("vertices[1].theta0_deg"),
            std::string::npos);
  EXPECT_NE(error_of(std::string(kHeader) + R"("period": 1, "vertices": [{"theta0_deg": 120}]})")
                .find("vertices[0].theta1_deg: missing"),
            std::string::npos);
  EXPECT_NE(error_of(std::string(kHeader) +
                     R"("period": 1, "vertices": [{"theta0_deg": 120, "theta1_deg": 60, "sigma": -1, "i_out": 1, "color": 3}]})")
                .find("vertices[0].color: unknown"),
            std::string::npos);
  EXPECT_NE(error_of("{\n  \"format\": \n}").find("line 3"), std::string::npos);
  EXPECT_THROW(parse_design("[1, 2]"), InvalidDesign);
  EXPECT_THROW(parse_design("{,"), ParseError);
  EXPECT_THROW(parse_design(std::string(kHeader) +
                            R"("period": 1, "vertices": [{"theta0_deg": 70, "theta1_deg": 70, "sigma": -1, "i_out": 1}]})"),
               SingularVertex);
}

TEST(DesignFile, RoundTripIsStableAndIdempotent) {
  for (const char* stem : {"fig3a", "fig3b", "fig3c", "fig3d", "fig3e", "fig3f", "fig4b"}) {
    const StripDesign d = oracle::load_design(stem);
    const std::string text = write_design(d);
    const StripDesign back = parse_design(text);
    EXPECT_TRUE(approx_equal(back, d));
    EXPECT_EQ(write_design(back), text);
  }
  const StripDesign odd({make_vertex(SectorAngles::from_radians(1.234567890123, 0.5), FoldMode(1), 1),
                         make_vertex_deg(60, 60, 1, 2)},
                        false, 2, {{0.1, 0.25, 0.3, 0.4}, {0.25, 1, 2, 3}});
  const std::string text = write_design(odd);
  const StripDesign back = parse_design(text);
  EXPECT_TRUE(approx_equal(back, odd));
  EXPECT_EQ(back.lengths()[1][0], 0.25);
  EXPECT_EQ(write_design(back), text);
}

TEST(Format, NumbersAndObj) {
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333");
  EXPECT_EQ(format_number(180.0), "180");
  Mesh m;
  m.points = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, -0.0)};
  m.faces = {{0, 1, 2}};
  std::ostringstream out;
  write_obj(out, m);
  EXPECT_EQ(out.str(), "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n");
}

TEST(Format, PolylineCsv) {
  const auto p = parse_polyline_csv("x,y\n0,0\n\n1, 0.5\n");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[1].y(), 0.5);
  try {
    parse_polyline_csv("x,y\n0,0\n1;2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

}  // namespace
}  // namespace foldwave
