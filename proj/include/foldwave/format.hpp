#pragma once

// Text formats: fixed-precision numbers, OBJ meshes, orbit and polyline CSV.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "foldwave/embedding.hpp"
#include "foldwave/strip_dynamics.hpp"

namespace foldwave {

/// Shortest %g-style text with `digits` significant digits; -0 prints as 0.
std::string format_number(double x, int digits = 9);

/// `v x y z` lines, then `f i j k` lines with 1-based indices.
void write_obj(std::ostream& out, const Mesh& mesh);

/// Header `t,rho_deg`; with `full`, one column per crease of every vertex in
/// a cell (`v<k>_rho<i>_deg`). The final row has no cell after it and leaves
/// those columns empty.
void write_orbit_csv(std::ostream& out, const Orbit& orbit, std::size_t period, bool full);

/// `x,y` rows; an optional `x,y` header and blank lines are skipped. Throws
/// ParseError naming the line.
std::vector<Vec2> parse_polyline_csv(std::string_view text);

/// Whole file as text. Throws ParseError when it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace foldwave
