#include "foldwave/design_io.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "foldwave/errors.hpp"
#include "foldwave/format.hpp"

namespace foldwave {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InvalidDesign(path + ": " + what);
}

void reject_unknown(const json& object, const std::string& path,
                    std::initializer_list<std::string_view> known) {
  for (const auto& item : object.items()) {
    bool found = false;
    for (std::string_view k : known) found = found || item.key() == k;
    if (!found) fail(path.empty() ? item.key() : path + "." + item.key(), "unknown field");
  }
}

const json& require(const json& object, const std::string& path, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) fail(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

double number(const json& value, const std::string& path) {
  if (!value.is_number()) fail(path, "expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) fail(path, "expected a finite number");
  return x;
}

long long integer(const json& value, const std::string& path) {
  if (!value.is_number_integer()) fail(path, "expected an integer");
  return value.get<long long>();
}

double angle_deg(const json& value, const std::string& path) {
  const double deg = number(value, path);
  if (!(deg > 0.0 && deg < 180.0)) fail(path, "sector angle must lie strictly between 0 and 180");
  return deg;
}

// Degrees rounded to 15 significant digits; stable under a degree/radian round trip.
double rounded_degrees(double rad) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, rad_to_deg(rad), std::chars_format::general, 15);
  double deg = 0.0;
  std::from_chars(buf, r.ptr, deg);
  return deg;
}

}  // namespace

StripDesign parse_design(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("design file line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": malformed JSON");
  }
  if (!root.is_object()) fail("(root)", "expected an object");
  reject_unknown(root, "", {"format", "version", "periodic", "period", "vertices"});

  const json& format = require(root, "", "format");
  if (!format.is_string() || format.get<std::string>() != kDesignFormat) {
    fail("format", "expected \"" + std::string(kDesignFormat) + "\"");
  }
  if (integer(require(root, "", "version"), "version") != kDesignVersion) {
    fail("version", "unsupported version (expected " + std::to_string(kDesignVersion) + ")");
  }
  const json& periodic = require(root, "", "periodic");
  if (!periodic.is_boolean()) fail("periodic", "expected true or false");
  long long period = 1;
  if (root.contains("period")) {
    period = integer(root["period"], "period");
    if (period < 1) fail("period", "must be a positive integer");
  }

  const json& list = require(root, "", "vertices");
  if (!list.is_array() || list.empty()) fail("vertices", "expected a non-empty array");

  std::vector<VertexSpec> vertices;
  std::vector<CreaseLengths> lengths;
  bool any_lengths = false;
  for (std::size_t n = 0; n < list.size(); ++n) {
    const std::string path = "vertices[" + std::to_string(n) + "]";
    const json& v = list[n];
    if (!v.is_object()) fail(path, "expected an object");
    reject_unknown(v, path, {"theta0_deg", "theta1_deg", "sigma", "i_out", "lengths"});
    const double t0 = angle_deg(require(v, path, "theta0_deg"), path + ".theta0_deg");
    const double t1 = angle_deg(require(v, path, "theta1_deg"), path + ".theta1_deg");
    const long long sigma = integer(require(v, path, "sigma"), path + ".sigma");
    if (sigma != 1 && sigma != -1) fail(path + ".sigma", "expected -1 or 1");
    const long long i_out = integer(require(v, path, "i_out"), path + ".i_out");
    if (i_out < 1 || i_out > 3) fail(path + ".i_out", "expected 1, 2 or 3");

    CreaseLengths l = kUnitLengths;
    if (v.contains("lengths")) {
      const json& arr = v["lengths"];
      if (!arr.is_array() || arr.size() != 4) fail(path + ".lengths", "expected four numbers");
      for (std::size_t i = 0; i < 4; ++i) {
        const std::string lpath = path + ".lengths[" + std::to_string(i) + "]";
        l[i] = number(arr[i], lpath);
        if (!(l[i] > 0.0)) fail(lpath, "must be positive");
      }
      any_lengths = true;
    }
    lengths.push_back(l);

    try {
      vertices.push_back(make_vertex_deg(t0, t1, static_cast<int>(sigma), static_cast<int>(i_out)));
    } catch (const SingularVertex& e) {
      throw SingularVertex(path + ": " + e.what());
    }
  }

  try {
    return StripDesign(std::move(vertices), periodic.get<bool>(), static_cast<std::size_t>(period),
                       any_lengths ? std::move(lengths) : std::vector<CreaseLengths>{});
  } catch (const InvalidDesign& e) {
    throw InvalidDesign(std::string("design: ") + e.what());
  }
}

StripDesign read_design_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_design(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const InvalidDesign& e) {
    throw InvalidDesign(path + ": " + e.what());
  } catch (const SingularVertex& e) {
    throw SingularVertex(path + ": " + e.what());
  }
}

std::string write_design(const StripDesign& design) {
  bool unit_lengths = true;
  for (const CreaseLengths& l : design.lengths()) unit_lengths = unit_lengths && l == kUnitLengths;

  // ordered_json keeps the documented key order.
  using ordered = nlohmann::ordered_json;
  ordered vertices = ordered::array();
  for (std::size_t n = 0; n < design.size(); ++n) {
    const VertexSpec& spec = design.vertices()[n];
    ordered v;
    v["theta0_deg"] = rounded_degrees(spec.angles.theta0());
    v["theta1_deg"] = rounded_degrees(spec.angles.theta1());
    v["sigma"] = spec.mode.sigma();
    v["i_out"] = spec.i_out;
    if (!unit_lengths) {
      const CreaseLengths& l = design.lengths()[n];
      v["lengths"] = ordered::array({l[0], l[1], l[2], l[3]});
    }
    vertices.push_back(std::move(v));
  }

  ordered root;
  root["format"] = kDesignFormat;
  root["version"] = kDesignVersion;
  root["periodic"] = design.periodic();
  root["period"] = design.period();
  root["vertices"] = std::move(vertices);
  return root.dump(2) + "\n";
}

}  // namespace foldwave
