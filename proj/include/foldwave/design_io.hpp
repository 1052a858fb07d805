#pragma once

// Design files: JSON with angles in degrees.
//
//   {
//     "format": "foldwave-design",
//     "version": 1,
//     "periodic": true,
//     "period": 2,
//     "vertices": [
//       {"theta0_deg": 150, "theta1_deg": 90, "sigma": -1, "i_out": 1},
//       {"theta0_deg": 90, "theta1_deg": 30, "sigma": -1, "i_out": 3,
//        "lengths": [1, 1, 1, 1]}
//     ]
//   }

#include <string>
#include <string_view>

#include "foldwave/strip_design.hpp"

namespace foldwave {

inline constexpr std::string_view kDesignFormat = "foldwave-design";
inline constexpr int kDesignVersion = 1;

/// Throws ParseError for malformed JSON (with line and column) and
/// InvalidDesign for schema or value errors (with the field path, e.g.
/// `vertices[2].sigma`). Singular adjacent-crease vertices raise
/// SingularVertex.
StripDesign parse_design(std::string_view text);
StripDesign read_design_file(const std::string& path);

/// Angles are written rounded to 15 significant digits in degrees, so a
/// written file re-parses within 1e-12 rad and rewrites byte-identically.
/// Lengths are omitted when they are all 1.
std::string write_design(const StripDesign& design);

}  // namespace foldwave
