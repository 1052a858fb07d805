#include "foldwave/format.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "foldwave/errors.hpp"

namespace foldwave {

std::string format_number(double x, int digits) {
  if (x == 0.0) return "0";
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, digits);
  return std::string(buf, result.ptr);
}

void write_obj(std::ostream& out, const Mesh& mesh) {
  for (const Vec3& p : mesh.points) {
    out << "v " << format_number(p.x()) << ' ' << format_number(p.y()) << ' '
        << format_number(p.z()) << '\n';
  }
  for (const auto& f : mesh.faces) {
    out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  }
}

void write_orbit_csv(std::ostream& out, const Orbit& orbit, std::size_t period, bool full) {
  out << "t,rho_deg";
  if (full) {
    for (std::size_t k = 0; k < period; ++k) {
      for (int i = 0; i < 4; ++i) out << ",v" << k << "_rho" << i << "_deg";
    }
  }
  out << '\n';
  for (std::size_t t = 0; t < orbit.rho_t.size(); ++t) {
    out << t << ',' << format_number(rad_to_deg(orbit.rho_t[t]));
    if (full) {
      for (std::size_t k = 0; k < period; ++k) {
        const std::size_t n = t * period + k;
        for (int i = 0; i < 4; ++i) {
          out << ',';
          if (n < orbit.full_states.size()) {
            out << format_number(rad_to_deg(orbit.full_states[n].rho[i]));
          }
        }
      }
    }
    out << '\n';
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view s, double& value) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto result = std::from_chars(s.data(), s.data() + s.size(), value);
  return result.ec == std::errc() && result.ptr == s.data() + s.size() && std::isfinite(value);
}

}  // namespace

std::vector<Vec2> parse_polyline_csv(std::string_view text) {
  std::vector<Vec2> points;
  std::size_t line_number = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    const std::string_view line = trim(text.substr(0, end));
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_number;
    if (line.empty() || line.front() == '#') continue;
    if (points.empty() && line == "x,y") continue;
    const auto comma = line.find(',');
    Vec2 p;
    if (comma == std::string_view::npos || !parse_double(line.substr(0, comma), p.x()) ||
        !parse_double(line.substr(comma + 1), p.y())) {
      throw ParseError("polyline line " + std::to_string(line_number) +
                       ": expected two numbers 'x,y', got '" + std::string(line) + "'");
    }
    points.push_back(p);
  }
  return points;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace foldwave
