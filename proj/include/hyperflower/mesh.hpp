#pragma once

// Combinatorial triangulated surfaces: indexed face sets with layer structure
// and discrete curvature.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "hyperflower/tiling.hpp"

namespace hyperflower {

struct VertexRecord {
  std::uint32_t id = 0;
  int layer = 0;
  bool boundary = false;
  /// Angular slot within the vertex's ring as a fraction of a turn, in [0, 1).
  double ring_position = 0.0;
  /// +1 / -1 for the two sides of an annulus, 0 on its central ring and on disks.
  int side = 0;
};

struct Edge {
  std::uint32_t a = 0;  ///< a < b
  std::uint32_t b = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Indexed face set. Immutable once constructed; the constructor checks that
/// every edge borders one or two faces, that orientations agree across shared
/// edges and that the faces form one connected piece.
class TriMesh {
 public:
  /// Boundary flags in `vertices` are recomputed from the faces. `face_layers`
  /// may be empty, in which case layers are assigned by face-adjacency depth
  /// from the faces around vertex 0.
  TriMesh(std::vector<VertexRecord> vertices, std::vector<Triangle> faces,
          std::vector<int> face_layers = {});

  /// Vertex layers become edge-graph distances from vertex 0 and ring positions
  /// follow id order within each layer.
  static TriMesh from_faces(std::size_t vertex_count, std::vector<Triangle> faces);

  const std::vector<VertexRecord>& vertices() const { return vertices_; }
  const std::vector<Triangle>& faces() const { return faces_; }
  const std::vector<int>& face_layers() const { return face_layers_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t face_count() const { return faces_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Number of faces incident to v (equals the edge degree at interior vertices).
  int degree(std::uint32_t v) const;
  bool is_boundary(std::uint32_t v) const;
  int max_face_layer() const;
  /// True when some vertex carries a nonzero side tag.
  bool is_annulus() const;

 private:
  void check_vertex(std::uint32_t v) const;

  std::vector<VertexRecord> vertices_;
  std::vector<Triangle> faces_;
  std::vector<int> face_layers_;
  std::vector<Edge> edges_;
  std::vector<int> face_degree_;
};

/// The {3,k} disk with `layers` layers of triangles around the origin fan,
/// built purely combinatorially.
TriMesh build_disk(int k, int layers, std::size_t triangle_budget = 1'000'000);

/// Forgets the coordinates of a tiling patch.
TriMesh mesh_from_tiling(const TilingPatch& patch);

/// Angle defect in units of pi/3 with every face a unit Euclidean equilateral triangle.
int angle_defect_units(const TriMesh& mesh, std::uint32_t v);

/// 2*pi - deg*pi/3 at interior vertices, pi - deg*pi/3 on the boundary.
double angle_defect(const TriMesh& mesh, std::uint32_t v);

struct CurvatureReport {
  std::vector<double> defects;
  std::vector<int> defect_units;  ///< multiples of pi/3, exact
  double total_defect = 0.0;
  int total_units = 0;
  /// Defect at the first interior vertex; 0 when there is none.
  double interior_defect = 0.0;
};

CurvatureReport curvature_report(const TriMesh& mesh);

/// Boundary edge count of the sub-mesh made of faces with layer <= L, for L = 0..max.
std::vector<std::size_t> boundary_stats(const TriMesh& mesh);

int euler_characteristic(const TriMesh& mesh);

/// degree -> number of vertices with that face degree.
std::map<int, std::size_t> degree_histogram(const TriMesh& mesh);

}  // namespace hyperflower
