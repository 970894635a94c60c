#include "hyperflower/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperflower/crochet.hpp"
#include "hyperflower/cylinder.hpp"
#include "hyperflower/embed.hpp"
#include "hyperflower/emit.hpp"
#include "hyperflower/error.hpp"
#include "hyperflower/growth.hpp"
#include "hyperflower/mesh.hpp"
#include "hyperflower/tiling.hpp"

namespace hyperflower {
namespace {

struct GlobalFlags {
  std::string out;
  std::uint64_t seed = 1;
  std::size_t budget = 1'000'000;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw IoError("failed writing " + path);
}

Vec3 parse_vec3(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("vector", "expected x,y,z but got '" + text + "'");
    }
  }
  if (v.size() != 3) throw CLI::ValidationError("vector", "expected x,y,z but got '" + text + "'");
  return {v[0], v[1], v[2]};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperbolic {3,k} tilings, meshes, embeddings, cylinders and crochet patterns",
               "hyperflower"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags global;
  app.add_option("--out", global.out, "Output file (default: standard output)");
  app.add_option("--seed", global.seed, "Seed for jittered embeddings");
  app.add_option("--budget", global.budget, "Triangle budget")->check(CLI::PositiveNumber);

  // tile
  int tile_k = 7;
  int tile_layers = 3;
  std::string tile_model = "klein";
  RenderOptions render;
  bool no_boundary = false;
  auto* tile = app.add_subcommand("tile", "SVG of a {3,k} tiling patch");
  tile->add_option("--k", tile_k, "Triangles per vertex");
  tile->add_option("--layers", tile_layers, "Layers around the origin fan");
  tile->add_option("--model", tile_model, "klein or poincare")
      ->check(CLI::IsMember({"klein", "poincare"}));
  tile->add_option("--width", render.width_px, "Image width in pixels");
  tile->add_option("--stroke", render.stroke_width, "Stroke width in model units");
  tile->add_flag("--no-boundary", no_boundary, "Omit the unit circle");
  tile->add_flag("--depth-coloring", render.depth_coloring, "Fill triangles by layer");

  // mesh
  int mesh_k = 7;
  int mesh_layers = 3;
  auto* mesh_cmd = app.add_subcommand("mesh", "Statistics of the combinatorial {3,k} disk");
  mesh_cmd->add_option("--k", mesh_k, "Triangles per vertex");
  mesh_cmd->add_option("--layers", mesh_layers, "Layers around the origin fan");

  // growth
  double r_max = 5.0;
  int steps = 51;
  auto* growth = app.add_subcommand("growth", "Circumference growth table as CSV");
  growth->add_option("--r-max", r_max, "Largest radius");
  growth->add_option("--steps", steps, "Number of grid points");

  // embed
  int embed_k = 7;
  int embed_layers = 2;
  EmbedParams params;
  std::string report_path;
  auto* embed_cmd = app.add_subcommand("embed", "Relax a {3,k} disk into R^3 and write OBJ");
  embed_cmd->add_option("--k", embed_k, "Triangles per vertex");
  embed_cmd->add_option("--layers", embed_layers, "Layers around the origin fan");
  embed_cmd->add_option("--max-iterations", params.max_iterations, "Iteration cap");
  embed_cmd->add_option("--tolerance", params.tolerance, "Target max relative edge distortion");
  embed_cmd->add_option("--step", params.step_size, "Initial step size");
  embed_cmd->add_option("--jitter", params.jitter_scale, "Initial jitter, in edge lengths");
  embed_cmd->add_flag("--planar", params.planar, "Constrain the relaxation to the plane");
  embed_cmd->add_option("--report", report_path, "Write the JSON report here");

  // cylinder
  std::string b1_text = "0.8,0,0.6";
  std::string b2_text = "0.8,0,-0.6";
  std::string source = "surface";
  int t_samples = 33;
  int theta_samples = 48;
  int rows_per_side = 2;
  int neck_count = 8;
  int profile_samples = 199;
  std::string profile_path;
  std::string neck_path;
  EmbedParams cyl_params;
  cyl_params.target_length = edge_length(8);
  cyl_params.max_iterations = 20'000;
  auto* cyl = app.add_subcommand("cylinder", "Hyperbolic cylinder: neck, profile and OBJ");
  cyl->add_option("--b1", b1_text, "First ideal endpoint of the generator, x,y,z");
  cyl->add_option("--b2", b2_text, "Second ideal endpoint of the generator, x,y,z");
  cyl->add_option("--source", source, "surface (sampled) or mesh (relaxed degree-8 mesh)")
      ->check(CLI::IsMember({"surface", "mesh"}));
  cyl->add_option("--t-samples", t_samples, "Samples along the generator");
  cyl->add_option("--theta-samples", theta_samples, "Samples around the axis");
  cyl->add_option("--rows", rows_per_side, "Mesh rows on each side of the neck");
  cyl->add_option("--neck-count", neck_count, "Vertices on the neck ring of the mesh");
  cyl->add_option("--max-iterations", cyl_params.max_iterations, "Relaxation iteration cap");
  cyl->add_option("--profile", profile_path, "Write the t,distance_to_axis CSV here");
  cyl->add_option("--profile-samples", profile_samples, "Rows in the profile CSV");
  cyl->add_option("--neck", neck_path, "Write the neck circle as JSON here");

  // crochet
  int crochet_k = 7;
  int crochet_rows = 4;
  std::string format = "text";
  bool literal = false;
  auto* crochet = app.add_subcommand("crochet", "Row-by-row crochet pattern");
  crochet->add_option("--k", crochet_k, "Triangles per vertex");
  crochet->add_option("--rows", crochet_rows, "Number of rows");
  crochet->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  crochet->add_flag("--literal", literal, "Use the published seven-triangle transcription");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hyperflower: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    TilingOptions tiling;
    tiling.triangle_budget = global.budget;
    if (*tile) {
      render.model = tile_model == "poincare" ? DiskModel::Poincare : DiskModel::Klein;
      render.show_disk_boundary = !no_boundary;
      emit(render_svg(expand_tiling(tile_k, tile_layers, tiling), render), global.out, out);
    } else if (*mesh_cmd) {
      emit(render_mesh_stats(build_disk(mesh_k, mesh_layers, global.budget)), global.out, out);
    } else if (*growth) {
      emit(render_growth_csv(growth_table(r_max, steps)), global.out, out);
    } else if (*embed_cmd) {
      params.seed = global.seed;
      const auto mesh = build_disk(embed_k, embed_layers, global.budget);
      const auto [state, report] = relax(mesh, params);
      const auto obj = render_obj(mesh, state.positions);
      const auto json = render_embed_report(report);
      emit(obj, global.out, out);
      if (!report_path.empty()) emit(json, report_path, out);
      err << "embed: " << report.iterations_used << " iterations, max relative distortion "
          << format_double(report.max_relative_distortion) << "\n";
    } else if (*cyl) {
      const auto generator = Geodesic3::make(IdealEndpoint::from_direction(parse_vec3(b1_text)),
                                             IdealEndpoint::from_direction(parse_vec3(b2_text)));
      const auto surface = CylinderSurface::make(generator);
      std::string obj;
      if (source == "surface") {
        const auto sampled = sample_surface(surface, t_samples, theta_samples);
        obj = render_obj(sampled.mesh, sampled.positions);
      } else {
        cyl_params.seed = global.seed;
        const auto mesh = build_cylinder_mesh(rows_per_side, neck_count, global.budget);
        const auto [state, report] = relax(mesh, cyl_params);
        obj = render_obj(mesh, state.positions);
        err << "cylinder: relaxed mesh, max relative distortion "
            << format_double(report.max_relative_distortion) << "\n";
      }
      const auto profile = render_profile_csv(neck_profile(generator, profile_samples));
      const auto neck_json = render_neck(neck(surface));
      emit(obj, global.out, out);
      if (!profile_path.empty()) emit(profile, profile_path, out);
      if (!neck_path.empty()) emit(neck_json, neck_path, out);
    } else if (*crochet) {
      const Pattern p = literal ? pattern_k7(crochet_rows) : compile_pattern(crochet_k, crochet_rows);
      emit(format == "json" ? render_pattern_json(p) : render_text(p), global.out, out);
    }
  } catch (const CLI::ValidationError& e) {
    err << "hyperflower: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "hyperflower: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "hyperflower: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "hyperflower: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace hyperflower
