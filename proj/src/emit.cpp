#include "hyperflower/emit.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <system_error>

#include "hyperflower/error.hpp"

namespace hyperflower {
namespace {

using Json = nlohmann::ordered_json;

constexpr double kMaxArcRadius = 1e4;

struct Pt {
  double x;
  double y;
};

// Model coordinates to SVG user space (y flipped).
Pt svg_point(const KleinPoint& p, DiskModel model) {
  if (model == DiskModel::Poincare) {
    const auto q = klein_to_poincare(p);
    return {q.x, -q.y};
  }
  return {p.x, -p.y};
}

std::string xy(const Pt& p) { return format_double(p.x) + "," + format_double(p.y); }

// Path segment to q along the geodesic from p in the Poincare disk.
std::string arc_to(const Pt& p, const Pt& q) {
  const double det = p.x * q.y - p.y * q.x;
  const std::string line = "L " + format_double(q.x) + " " + format_double(q.y);
  if (std::abs(det) < 1e-14) return line;  // p, q and the centre are collinear
  const double bp = 0.5 * (p.x * p.x + p.y * p.y + 1.0);
  const double bq = 0.5 * (q.x * q.x + q.y * q.y + 1.0);
  const Pt c{(bp * q.y - p.y * bq) / det, (p.x * bq - bp * q.x) / det};
  const double r2 = c.x * c.x + c.y * c.y - 1.0;
  if (!(r2 > 0.0)) return line;
  const double r = std::sqrt(r2);
  if (r > kMaxArcRadius) return line;
  const double turn = (p.x - c.x) * (q.y - c.y) - (p.y - c.y) * (q.x - c.x);
  const std::string rs = format_double(r);
  return "A " + rs + " " + rs + " 0 0 " + (turn > 0.0 ? "1" : "0") + " " + format_double(q.x) +
         " " + format_double(q.y);
}

Json counts_json(const StitchCounts& c) {
  Json j;
  for (const auto s : kAllStitches) j[std::string(to_string(s))] = c[s];
  j["total"] = c.total;
  return j;
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) return "0";  // also folds -0
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw DomainError("format_double: conversion failed");
  return std::string(buf.data(), end);
}

const std::vector<std::string>& depth_palette() {
  static const std::vector<std::string> palette{"#f6c85f", "#6f4e7c", "#9dd866", "#ca472f",
                                                "#0b84a5", "#ffa056", "#8dddd0", "#e377c2"};
  return palette;
}

std::string render_svg(const TilingPatch& patch, const RenderOptions& options) {
  if (options.width_px < 64) throw DomainError("render_svg: width_px must be >= 64");
  if (!(options.stroke_width > 0.0)) throw DomainError("render_svg: stroke_width must be > 0");
  const std::string stroke = format_double(options.stroke_width);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(options.width_px) + "\" height=\"" + std::to_string(options.width_px) +
         "\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n";
  if (options.show_disk_boundary) {
    out += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" +
           stroke + "\"/>\n";
  }
  out += "<g stroke=\"#1f3a93\" stroke-width=\"" + stroke + "\" stroke-linejoin=\"round\">\n";
  const auto& palette = depth_palette();
  for (std::size_t t = 0; t < patch.triangles.size(); ++t) {
    const std::string fill =
        options.depth_coloring
            ? palette[static_cast<std::size_t>(patch.triangle_layers[t]) % palette.size()]
            : "none";
    std::array<Pt, 3> p{};
    for (int i = 0; i < 3; ++i) {
      p[static_cast<std::size_t>(i)] =
          svg_point(patch.vertices[patch.triangles[t][static_cast<std::size_t>(i)]].point,
                    options.model);
    }
    if (options.model == DiskModel::Klein) {
      out += "<polygon points=\"" + xy(p[0]) + " " + xy(p[1]) + " " + xy(p[2]) + "\" fill=\"" +
             fill + "\"/>\n";
    } else {
      out += "<path d=\"M " + format_double(p[0].x) + " " + format_double(p[0].y) + " " +
             arc_to(p[0], p[1]) + " " + arc_to(p[1], p[2]) + " " + arc_to(p[2], p[0]) +
             " Z\" fill=\"" + fill + "\"/>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_growth_csv(const GrowthTable& table) {
  std::string out = "r,c_euclidean,c_hyperbolic,ratio\n";
  for (const auto& row : table) {
    out += format_double(row.r) + "," + format_double(row.c_euclidean) + "," +
           format_double(row.c_hyperbolic) + "," + format_double(row.ratio) + "\n";
  }
  return out;
}

std::string render_profile_csv(const std::vector<ProfileSample>& samples) {
  std::string out = "t,distance_to_axis\n";
  for (const auto& s : samples) out += format_double(s.t) + "," + format_double(s.distance) + "\n";
  return out;
}

std::string render_obj(const TriMesh& mesh, const std::vector<Vec3>& positions) {
  if (positions.size() != mesh.vertex_count()) {
    throw DomainError("render_obj: one position per vertex is required");
  }
  std::string out;
  for (const auto& p : positions) {
    out += "v " + format_double(p.x) + " " + format_double(p.y) + " " + format_double(p.z) + "\n";
  }
  for (const auto& f : mesh.faces()) {
    out += "f " + std::to_string(f[0] + 1) + " " + std::to_string(f[1] + 1) + " " +
           std::to_string(f[2] + 1) + "\n";
  }
  return out;
}

std::string render_mesh_stats(const TriMesh& mesh) {
  Json j;
  j["vertices"] = mesh.vertex_count();
  j["edges"] = mesh.edge_count();
  j["faces"] = mesh.face_count();
  j["euler_characteristic"] = euler_characteristic(mesh);
  Json hist = Json::object();
  for (const auto& [deg, n] : degree_histogram(mesh)) hist[std::to_string(deg)] = n;
  j["degree_histogram"] = hist;
  const auto curvature = curvature_report(mesh);
  j["total_defect_units"] = curvature.total_units;
  j["total_defect"] = curvature.total_defect;
  j["boundary_edges_by_layer"] = boundary_stats(mesh);
  Json table = Json::array();
  for (const auto& v : mesh.vertices()) {
    Json row;
    row["id"] = v.id;
    row["layer"] = v.layer;
    row["boundary"] = v.boundary;
    row["degree"] = mesh.degree(v.id);
    row["defect_units"] = curvature.defect_units[v.id];
    row["defect"] = curvature.defects[v.id];
    table.push_back(row);
  }
  j["defects"] = table;
  return j.dump(2) + "\n";
}

std::string render_embed_report(const EmbedReport& report) {
  Json j;
  j["iterations_used"] = report.iterations_used;
  j["final_energy"] = report.final_energy;
  j["max_relative_distortion"] = report.max_relative_distortion;
  j["bounding_radius"] = report.bounding_radius;
  j["converged"] = report.converged;
  return j.dump(2) + "\n";
}

std::string render_neck(const NeckCircle& neck) {
  Json j;
  j["height"] = neck.height;
  j["hyperbolic_radius"] = neck.hyperbolic_radius;
  j["circumference"] = neck.circumference;
  j["parameter"] = neck.parameter;
  j["foot"] = {neck.foot.x, neck.foot.y, neck.foot.z};
  return j.dump(2) + "\n";
}

std::string render_pattern_json(const Pattern& p) {
  Json j;
  j["k"] = p.k;
  j["notes"] = p.notes;
  Json rows = Json::array();
  const auto counts = stitch_counts(p);
  for (std::size_t r = 0; r < p.rows.size(); ++r) {
    const auto& row = p.rows[r];
    Json jr;
    jr["index"] = row.index;
    jr["note"] = row.note;
    Json steps = Json::array();
    for (const auto& s : row.steps) {
      Json js;
      js["number"] = s.number;
      js["kind"] = std::string(to_string(s.kind));
      Json stitches = Json::array();
      for (const auto st : s.stitches) stitches.push_back(std::string(to_string(st)));
      js["stitches"] = stitches;
      js["anchor"] = s.anchor;
      js["repeat"] = s.repeat;
      if (s.kind == StepKind::RepeatGroup) js["group"] = {s.group_first, s.group_last};
      steps.push_back(js);
    }
    jr["steps"] = steps;
    jr["counts"] = counts_json(counts.rows[r]);
    rows.push_back(jr);
  }
  j["rows"] = rows;
  j["counts"] = counts_json(counts.total);
  return j.dump(2) + "\n";
}

}  // namespace hyperflower
