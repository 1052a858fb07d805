#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "foldwave/design_io.hpp"
#include "foldwave/errors.hpp"
#include "foldwave/format.hpp"
#include "foldwave/kernels.hpp"
#include "foldwave/shape_design.hpp"
#include "foldwave/strip_dynamics.hpp"
#include "foldwave/thickness.hpp"

namespace foldwave::cli {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kDefaultPeriodicCells = 10;

std::size_t default_cells(const StripDesign& design, std::optional<std::size_t> requested) {
  if (requested) return *requested;
  return design.periodic() ? kDefaultPeriodicCells : design.cell_count();
}

// Report values carry 9 significant digits, as in the text output.
double clean(double x) { return std::stod(format_number(x)); }

std::string fmt(double x) { return format_number(x); }

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw ParseError("cannot write '" + path.string() + "'");
}

// ---- analyze ---------------------------------------------------------------

struct CellReport {
  Classification classification;
  std::optional<CellMap> map;
};

CellReport analyze_cell(std::span<const VertexSpec> cell) {
  CellReport r;
  r.classification = classify(cell);
  if (r.classification.kind != Propagation::Degenerate) r.map = compose_cell(cell);
  return r;
}

std::optional<double> vertex_multiplier(const VertexSpec& spec) {
  if (is_singular(spec.angles, spec.mode)) return std::nullopt;
  return std::abs(folding_multiplier(spec.angles, spec.mode));
}

void analyze(const std::string& path, bool as_json, std::ostream& out) {
  const StripDesign design = read_design_file(path);
  const std::span<const VertexSpec> cell0 = design.cell(0);

  std::vector<CellReport> cells;
  for (std::size_t t = 0; t < design.cell_count(); ++t) cells.push_back(analyze_cell(design.cell(t)));
  const CellReport& first = cells.front();
  const Classification& c = first.classification;

  std::optional<double> width;
  if (c.kind == Propagation::DominoLike) width = transition_width(c.p_eff);
  std::optional<TurningAngles> turning;
  if (design.periodic()) turning = turning_angles(design);

  double p_min = c.p_eff;
  double p_max = c.p_eff;
  for (const CellReport& r : cells) {
    p_min = std::min(p_min, r.classification.p_eff);
    p_max = std::max(p_max, r.classification.p_eff);
  }

  if (as_json) {
    ordered_json j;
    j["periodic"] = design.periodic();
    j["vertices_per_cell"] = design.period();
    j["cells"] = design.cell_count();
    ordered_json vertices = ordered_json::array();
    for (const VertexSpec& spec : cell0) {
      ordered_json v;
      v["theta0_deg"] = clean(rad_to_deg(spec.angles.theta0()));
      v["theta1_deg"] = clean(rad_to_deg(spec.angles.theta1()));
      v["sigma"] = spec.mode.sigma();
      v["i_out"] = spec.i_out;
      const auto p = vertex_multiplier(spec);
      v["abs_p"] = p ? ordered_json(clean(*p)) : ordered_json(nullptr);
      vertices.push_back(std::move(v));
    }
    j["vertices"] = std::move(vertices);
    j["a_eff"] = first.map ? ordered_json(clean(first.map->a_eff)) : ordered_json(nullptr);
    j["b_eff"] = first.map ? ordered_json(clean(first.map->b_eff)) : ordered_json(nullptr);
    j["p_eff"] = clean(c.p_eff);
    j["classification"] = to_string(c.kind);
    j["attracting"] = to_string(c.attracting);
    j["transition_width"] = width ? ordered_json(clean(*width)) : ordered_json(nullptr);
    j["phi_dev_deg"] = turning ? ordered_json(clean(rad_to_deg(turning->developed))) : ordered_json(nullptr);
    j["phi_flat_deg"] =
        turning ? ordered_json(clean(rad_to_deg(turning->flat_folded))) : ordered_json(nullptr);
    if (cells.size() > 1) {
      ordered_json per_cell = ordered_json::array();
      for (const CellReport& r : cells) per_cell.push_back(clean(r.classification.p_eff));
      j["cell_p_eff"] = std::move(per_cell);
      j["p_eff_spread"] = clean(p_max - p_min);
    }
    out << j.dump(2) << '\n';
    return;
  }

  out << "periodic: " << (design.periodic() ? "true" : "false") << '\n';
  out << "vertices_per_cell: " << design.period() << '\n';
  out << "cells: " << design.cell_count() << '\n';
  for (std::size_t k = 0; k < cell0.size(); ++k) {
    const VertexSpec& spec = cell0[k];
    const auto p = vertex_multiplier(spec);
    out << "vertex " << k << ": theta0_deg=" << fmt(rad_to_deg(spec.angles.theta0()))
        << " theta1_deg=" << fmt(rad_to_deg(spec.angles.theta1()))
        << " sigma=" << (spec.mode.sigma() > 0 ? "+1" : "-1") << " i_out=" << spec.i_out
        << " abs_p=" << (p ? fmt(*p) : std::string("singular")) << '\n';
  }
  if (first.map) {
    out << "a_eff: " << fmt(first.map->a_eff) << '\n';
    out << "b_eff: " << fmt(first.map->b_eff) << '\n';
  } else {
    out << "a_eff: n/a\nb_eff: n/a\n";
  }
  out << "p_eff: " << fmt(c.p_eff) << '\n';
  out << "classification: " << to_string(c.kind) << '\n';
  out << "attracting: " << to_string(c.attracting) << '\n';
  out << "transition_width: " << (width ? fmt(*width) : std::string("n/a")) << '\n';
  out << "phi_dev_deg: " << (turning ? fmt(rad_to_deg(turning->developed)) : std::string("n/a"))
      << '\n';
  out << "phi_flat_deg: "
      << (turning ? fmt(rad_to_deg(turning->flat_folded)) : std::string("n/a")) << '\n';
  if (cells.size() > 1) {
    for (std::size_t t = 0; t < cells.size(); ++t) {
      out << "cell " << t << ": p_eff=" << fmt(cells[t].classification.p_eff) << '\n';
    }
    out << "p_eff_spread: " << fmt(p_max - p_min) << '\n';
  }
}

// ---- fold / sweep ----------------------------------------------------------

void fold(const std::string& path, double rho0_deg, std::optional<std::size_t> cells, bool full,
          std::ostream& out) {
  const StripDesign design = read_design_file(path);
  if (!(std::abs(rho0_deg) <= 180.0)) throw DomainError("--rho0 must lie in [-180, 180] degrees");
  const double rho0 = std::abs(rho0_deg) == 180.0 ? std::copysign(kPi, rho0_deg) : deg_to_rad(rho0_deg);
  const Orbit orbit = iterate(design, rho0, default_cells(design, cells));
  write_orbit_csv(out, orbit, design.period(), full);
}

void sweep(const std::string& path, std::size_t frames, const std::string& dir,
           std::optional<std::size_t> cells, bool negative, std::ostream& out) {
  const StripDesign design = read_design_file(path);
  const std::vector<double> angles = frame_angles(frames, negative);
  const std::vector<Mesh> meshes = frame_sweep(design, angles, default_cells(design, cells));

  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ParseError("cannot create '" + dir + "': " + ec.message());

  std::ostringstream index;
  index << "frame,rho0_deg,file\n";
  for (std::size_t k = 0; k < meshes.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%04zu.obj", k);
    std::ostringstream obj;
    write_obj(obj, meshes[k]);
    write_file(fs::path(dir) / name, obj.str());
    index << k << ',' << fmt(rad_to_deg(angles[k])) << ',' << name << '\n';
  }
  write_file(fs::path(dir) / "index.csv", index.str());
  out << "wrote " << meshes.size() << " frames to " << dir << '\n';
}

// ---- design ----------------------------------------------------------------

struct DesignOptions {
  std::string polyline;
  std::string template_path;
  std::optional<double> ratio;
  double l = 0.0;
  double phi_star_deg = 0.0;
  double phi0_deg = 0.0;
  bool miura = false;
  bool verify = false;
  std::string out_path;
};

void design(const DesignOptions& o, std::ostream& out, std::ostream& err) {
  const std::vector<Vec2> points = parse_polyline_csv(read_text_file(o.polyline));
  const StripDesign pattern = read_design_file(o.template_path);
  const double ratio = o.ratio ? *o.ratio : template_ratio(pattern);
  const PolylinePlan plan =
      map_polyline(points, o.l, deg_to_rad(o.phi_star_deg), deg_to_rad(o.phi0_deg),
                   o.miura ? PlanVariant::Reversed : PlanVariant::Standard);
  const StripDesign result = polyline_to_strip(plan, pattern, ratio);
  const std::string text = write_design(result);

  if (o.out_path.empty()) {
    out << text;
  } else {
    write_file(o.out_path, text);
  }

  if (o.verify) {
    const double deviation = plan_deviation(plan, result);
    const StripDesign reread = parse_design(text);
    double p_min = 0.0;
    double p_max = 0.0;
    for (std::size_t t = 0; t < result.cell_count(); ++t) {
      const double p = classify(result.cell(t)).p_eff;
      p_min = t == 0 ? p : std::min(p_min, p);
      p_max = t == 0 ? p : std::max(p_max, p);
    }
    std::ostream& report = o.out_path.empty() ? err : out;
    report << "verify: max_deviation=" << fmt(deviation)
           << " relative=" << fmt(deviation / plan.segment_length)
           << " p_eff_spread=" << fmt(p_max - p_min)
           << " roundtrip=" << (approx_equal(reread, result) ? "ok" : "mismatch") << '\n';
  }
}

// ---- thickness -------------------------------------------------------------

void thickness(const std::string& path, double d0, std::optional<std::size_t> cells,
               std::ostream& out) {
  const StripDesign design = read_design_file(path);
  const ThicknessProfile profile = thickness_profile(design, d0, default_cells(design, cells));

  out << "vertex,d0,d1,d2,d3\n";
  for (std::size_t n = 0; n < profile.offsets.size(); ++n) {
    const auto& d = profile.offsets[n].d;
    out << n << ',' << fmt(d[0]) << ',' << fmt(d[1]) << ',' << fmt(d[2]) << ',' << fmt(d[3])
        << '\n';
  }
  out << "\ncell,ratio\n";
  for (std::size_t t = 0; t < profile.cell_ratio.size(); ++t) {
    out << t << ',' << fmt(profile.cell_ratio[t]) << '\n';
  }
  out << "\nprofile," << (profile.exponential ? "exponential" : "uniform") << '\n';
  out << "height_drift,not modeled\n";
  try {
    const PanelInsertion panels = can_insert_rectangular_panels(design);
    out << "rectangular_panels," << (panels.feasible ? "feasible" : "infeasible") << '\n';
    if (!panels.feasible) {
      out << "offending_vertices,";
      for (std::size_t k = 0; k < panels.offending.size(); ++k) {
        out << (k ? ";" : "") << panels.offending[k];
      }
      out << '\n';
    }
  } catch (const WrongConnectivity& e) {
    out << "rectangular_panels,not applicable (" << e.what() << ")\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kinematics and inverse design of folded degree-4 vertex strips"};
  app.name("foldwave");
  app.require_subcommand(1);

  std::string design_path;
  bool as_json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Cell map, classification and turning angles");
  analyze_cmd->add_option("design", design_path, "Design file")->required();
  analyze_cmd->add_flag("--json", as_json, "Machine-readable report");

  double rho0_deg = 0.0;
  std::optional<std::size_t> cells;
  bool full = false;
  auto* fold_cmd = app.add_subcommand("fold", "Cell-boundary fold angles as CSV");
  fold_cmd->add_option("design", design_path, "Design file")->required();
  fold_cmd->add_option("--rho0", rho0_deg, "Input fold angle (deg)")->required();
  fold_cmd->add_option("--cells", cells, "Number of cells");
  fold_cmd->add_flag("--full", full, "Add every vertex fold angle");

  std::size_t frames = 0;
  std::string out_dir;
  bool negative = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "OBJ frames from developed to flat-folded");
  sweep_cmd->add_option("design", design_path, "Design file")->required();
  sweep_cmd->add_option("--frames", frames, "Number of frames")->required()->check(CLI::Range(2, 1000000));
  sweep_cmd->add_option("--out", out_dir, "Output directory")->required();
  sweep_cmd->add_option("--cells", cells, "Number of cells");
  sweep_cmd->add_flag("--negative", negative, "Fold towards -180 degrees");

  DesignOptions design_opts;
  auto* design_cmd = app.add_subcommand("design", "Strip design following a planar polyline");
  design_cmd->add_option("polyline", design_opts.polyline, "Polyline CSV (x,y rows)")->required();
  design_cmd->add_option("--template", design_opts.template_path, "Period-4 template design")->required();
  design_cmd->add_option("--ratio", design_opts.ratio, "A/B of adjacent-crease vertices (default: template)");
  design_cmd->add_option("--l", design_opts.l, "Crease length")->required();
  design_cmd->add_option("--phi-star", design_opts.phi_star_deg, "Offset angle (deg)")->required();
  design_cmd->add_option("--phi0", design_opts.phi0_deg, "Offset angle at the first point (deg)")->required();
  design_cmd->add_flag("--miura", design_opts.miura, "Reverse both in-cell rotations");
  design_cmd->add_flag("--verify", design_opts.verify, "Rebuild the developed strip and compare");
  design_cmd->add_option("--out", design_opts.out_path, "Output design file (default: stdout)");

  double d0 = 1.0;
  auto* thickness_cmd = app.add_subcommand("thickness", "Offset-hinge link lengths along the strip");
  thickness_cmd->add_option("design", design_path, "Design file")->required();
  thickness_cmd->add_option("--d0", d0, "Offset at the first vertex")->check(CLI::PositiveNumber);
  thickness_cmd->add_option("--cells", cells, "Number of cells");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ErrorCategory::Input);
  }

  try {
    if (analyze_cmd->parsed()) {
      analyze(design_path, as_json, out);
    } else if (fold_cmd->parsed()) {
      fold(design_path, rho0_deg, cells, full, out);
    } else if (sweep_cmd->parsed()) {
      sweep(design_path, frames, out_dir, cells, negative, out);
    } else if (design_cmd->parsed()) {
      design(design_opts, out, err);
    } else if (thickness_cmd->parsed()) {
      thickness(design_path, d0, cells, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.category());
  }
  return 0;
}

}  // namespace foldwave::cli
