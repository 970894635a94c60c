#pragma once

// File emitters. All output is deterministic and numbers use the shortest
// decimal form that parses back to the same double.

#include <string>
#include <vector>

#include "hyperflower/crochet.hpp"
#include "hyperflower/cylinder.hpp"
#include "hyperflower/embed.hpp"
#include "hyperflower/growth.hpp"
#include "hyperflower/mesh.hpp"
#include "hyperflower/tiling.hpp"

namespace hyperflower {

std::string format_double(double v);

enum class DiskModel { Klein, Poincare };

struct RenderOptions {
  DiskModel model = DiskModel::Klein;
  int width_px = 800;
  double stroke_width = 0.002;  ///< model units
  bool show_disk_boundary = true;
  bool depth_coloring = false;  ///< fill faces by layer from an 8-colour palette
};

/// Eight fill colours, cycled by layer index.
const std::vector<std::string>& depth_palette();

/// SVG 1.1 with viewBox -1.05 -1.05 2.1 2.1 (y pointing up in the model).
/// Klein mode draws each triangle as a <polygon>; Poincare mode as a <path>
/// of circular arcs orthogonal to the unit circle.
std::string render_svg(const TilingPatch& patch, const RenderOptions& options);

/// Header r,c_euclidean,c_hyperbolic,ratio.
std::string render_growth_csv(const GrowthTable& table);

/// Header t,distance_to_axis.
std::string render_profile_csv(const std::vector<ProfileSample>& samples);

/// `v x y z` records, then `f i j k` with 1-based indices.
std::string render_obj(const TriMesh& mesh, const std::vector<Vec3>& positions);

/// Counts, degree histogram, curvature table and boundary growth as JSON.
std::string render_mesh_stats(const TriMesh& mesh);

std::string render_embed_report(const EmbedReport& report);

std::string render_neck(const NeckCircle& neck);

/// {"k", "notes", "rows": [{"index", "note", "steps": [{"number", "kind",
/// "stitches", "anchor", "repeat", "group"?}]}]} with fields in that order.
std::string render_pattern_json(const Pattern& p);

}  // namespace hyperflower
