#include "hyperflower/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <string>

#include "hyperflower/error.hpp"
#include "ring_growth.hpp"

namespace hyperflower {
namespace {

constexpr double kThirdPi = std::numbers::pi / 3.0;

Edge make_edge(std::uint32_t a, std::uint32_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Face-adjacency depth from the faces containing `root`; -1 where unreachable.
std::vector<int> face_depths(const std::vector<Triangle>& faces,
                             const std::map<Edge, std::vector<std::uint32_t>>& edge_faces,
                             std::uint32_t root) {
  std::vector<int> depth(faces.size(), -1);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t f = 0; f < faces.size(); ++f) {
    if (std::ranges::find(faces[f], root) != faces[f].end()) {
      depth[f] = 0;
      queue.push_back(f);
    }
  }
  while (!queue.empty()) {
    const auto f = queue.front();
    queue.pop_front();
    for (int e = 0; e < 3; ++e) {
      for (const auto g : edge_faces.at(make_edge(faces[f][e], faces[f][(e + 1) % 3]))) {
        if (depth[g] < 0) {
          depth[g] = depth[f] + 1;
          queue.push_back(g);
        }
      }
    }
  }
  return depth;
}

std::map<Edge, std::vector<std::uint32_t>> edge_face_map(const std::vector<Triangle>& faces) {
  std::map<Edge, std::vector<std::uint32_t>> out;
  for (std::uint32_t f = 0; f < faces.size(); ++f) {
    for (int e = 0; e < 3; ++e) out[make_edge(faces[f][e], faces[f][(e + 1) % 3])].push_back(f);
  }
  return out;
}

}  // namespace

TriMesh::TriMesh(std::vector<VertexRecord> vertices, std::vector<Triangle> faces,
                 std::vector<int> face_layers)
    : vertices_(std::move(vertices)), faces_(std::move(faces)), face_layers_(std::move(face_layers)) {
  const auto n = static_cast<std::uint32_t>(vertices_.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    if (vertices_[i].id != i) throw MeshError("vertex ids must equal their index");
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> directed;
  face_degree_.assign(n, 0);
  for (std::uint32_t f = 0; f < faces_.size(); ++f) {
    const auto& t = faces_[f];
    if (t[0] >= n || t[1] >= n || t[2] >= n) {
      throw MeshError("face " + std::to_string(f) + " references a missing vertex");
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw MeshError("face " + std::to_string(f) + " repeats a vertex");
    }
    for (int e = 0; e < 3; ++e) {
      if (!directed.emplace(std::pair{t[e], t[(e + 1) % 3]}, f).second) {
        throw MeshError("edge " + std::to_string(t[e]) + "-" + std::to_string(t[(e + 1) % 3]) +
                        " is traversed twice in the same direction");
      }
      ++face_degree_[t[e]];
    }
  }

  const auto edge_faces = edge_face_map(faces_);
  edges_.reserve(edge_faces.size());
  for (const auto& [edge, fs] : edge_faces) {
    if (fs.size() > 2) throw MeshError("an edge is shared by more than two faces");
    edges_.push_back(edge);
  }

  if (!faces_.empty()) {
    const auto depth = face_depths(faces_, edge_faces, faces_[0][0]);
    if (std::ranges::find(depth, -1) != depth.end()) {
      throw MeshError("face adjacency graph is not connected");
    }
    if (face_layers_.empty()) {
      face_layers_ = face_depths(faces_, edge_faces, 0);
      if (std::ranges::find(face_layers_, -1) != face_layers_.end()) face_layers_ = depth;
    }
  }
  if (face_layers_.size() != faces_.size()) throw MeshError("one layer per face is required");

  for (auto& v : vertices_) v.boundary = face_degree_[v.id] == 0;
  for (const auto& [edge, fs] : edge_faces) {
    if (fs.size() == 1) {
      vertices_[edge.a].boundary = true;
      vertices_[edge.b].boundary = true;
    }
  }
}

TriMesh TriMesh::from_faces(std::size_t vertex_count, std::vector<Triangle> faces) {
  std::vector<std::vector<std::uint32_t>> adjacency(vertex_count);
  for (const auto& t : faces) {
    for (const auto v : t) {
      if (v >= vertex_count) throw MeshError("face references a missing vertex");
    }
    for (int e = 0; e < 3; ++e) {
      adjacency[t[e]].push_back(t[(e + 1) % 3]);
      adjacency[t[(e + 1) % 3]].push_back(t[e]);
    }
  }
  std::vector<int> layer(vertex_count, -1);
  if (vertex_count > 0) {
    std::deque<std::uint32_t> queue{0};
    layer[0] = 0;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (const auto w : adjacency[v]) {
        if (layer[w] < 0) {
          layer[w] = layer[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  std::map<int, std::size_t> per_layer;
  for (const int l : layer) ++per_layer[l];
  std::map<int, std::size_t> seen;
  std::vector<VertexRecord> records(vertex_count);
  for (std::uint32_t i = 0; i < vertex_count; ++i) {
    const auto slot = seen[layer[i]]++;
    records[i] = {i, std::max(layer[i], 0), false,
                  static_cast<double>(slot) / static_cast<double>(per_layer[layer[i]]), 0};
  }
  return TriMesh(std::move(records), std::move(faces));
}

void TriMesh::check_vertex(std::uint32_t v) const {
  if (v >= vertices_.size()) throw UnknownVertexError("unknown vertex " + std::to_string(v));
}

int TriMesh::degree(std::uint32_t v) const {
  check_vertex(v);
  return face_degree_[v];
}

bool TriMesh::is_boundary(std::uint32_t v) const {
  check_vertex(v);
  return vertices_[v].boundary;
}

int TriMesh::max_face_layer() const {
  return face_layers_.empty() ? -1 : *std::ranges::max_element(face_layers_);
}

bool TriMesh::is_annulus() const {
  return std::ranges::any_of(vertices_, [](const VertexRecord& v) { return v.side != 0; });
}

TriMesh build_disk(int k, int layers, std::size_t triangle_budget) {
  if (k < 7) throw DomainError("build_disk: k must be >= 7, got " + std::to_string(k));
  if (layers < 0) throw DomainError("build_disk: layers must be >= 0");

  // Grow whole vertex rings until every triangle within `layers` adjacency
  // steps of the origin fan exists, then cut the disk out by face depth.
  std::vector<Triangle> faces;
  std::vector<int> ring_of{0};
  std::vector<double> slot_of{0.0};
  std::vector<std::uint32_t> ring;
  for (std::uint32_t j = 0; j < static_cast<std::uint32_t>(k); ++j) {
    ring.push_back(1 + j);
    ring_of.push_back(1);
    slot_of.push_back(static_cast<double>(j) / k);
    faces.push_back({0u, 1 + j, 1 + (j + 1) % static_cast<std::uint32_t>(k)});
  }
  std::uint32_t next_id = static_cast<std::uint32_t>(k) + 1;
  std::vector<int> count(next_id, 0);
  for (const auto& t : faces) {
    for (const auto v : t) ++count[v];
  }
  const std::size_t construction_budget = triangle_budget * 16;
  for (int r = 0; r <= layers; ++r) {
    std::vector<int> outward(ring.size());
    for (std::size_t j = 0; j < ring.size(); ++j) outward[j] = k - count[ring[j]];
    const auto before = faces.size();
    ring = detail::grow_ring(ring, outward, next_id, faces);
    if (faces.size() > construction_budget) {
      throw ResourceError("build_disk: triangle budget of " + std::to_string(triangle_budget) +
                          " exceeded");
    }
    count.resize(next_id, 0);
    ring_of.resize(next_id, r + 2);
    slot_of.resize(next_id);
    for (std::size_t j = 0; j < ring.size(); ++j) {
      slot_of[ring[j]] = static_cast<double>(j) / static_cast<double>(ring.size());
    }
    for (auto f = before; f < faces.size(); ++f) {
      for (const auto v : faces[f]) ++count[v];
    }
  }

  const auto edge_faces = edge_face_map(faces);
  const auto depth = face_depths(faces, edge_faces, 0);
  std::vector<Triangle> kept;
  std::vector<int> kept_layers;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (depth[f] >= 0 && depth[f] <= layers) {
      kept.push_back(faces[f]);
      kept_layers.push_back(depth[f]);
    }
  }
  if (kept.size() > triangle_budget) {
    throw ResourceError("build_disk: triangle budget of " + std::to_string(triangle_budget) +
                        " exceeded");
  }

  // Compact ids, preserving ring order.
  std::vector<std::int64_t> remap(next_id, -1);
  for (const auto& t : kept) {
    for (const auto v : t) remap[v] = 0;
  }
  std::vector<VertexRecord> records;
  for (std::uint32_t v = 0; v < next_id; ++v) {
    if (remap[v] < 0) continue;
    remap[v] = static_cast<std::int64_t>(records.size());
    records.push_back({static_cast<std::uint32_t>(records.size()), ring_of[v], false, slot_of[v], 0});
  }
  for (auto& t : kept) {
    for (auto& v : t) v = static_cast<std::uint32_t>(remap[v]);
  }
  return TriMesh(std::move(records), std::move(kept), std::move(kept_layers));
}

TriMesh mesh_from_tiling(const TilingPatch& patch) {
  std::vector<VertexRecord> records;
  records.reserve(patch.vertices.size());
  for (std::uint32_t i = 0; i < patch.vertices.size(); ++i) {
    const auto& p = patch.vertices[i].point;
    double turn = std::atan2(p.y, p.x) / (2.0 * std::numbers::pi);
    if (turn < 0.0) turn += 1.0;
    records.push_back({i, patch.vertices[i].layer, false, turn, 0});
  }
  return TriMesh(std::move(records), patch.triangles, patch.triangle_layers);
}

int angle_defect_units(const TriMesh& mesh, std::uint32_t v) {
  const int deg = mesh.degree(v);
  return (mesh.is_boundary(v) ? 3 : 6) - deg;
}

double angle_defect(const TriMesh& mesh, std::uint32_t v) {
  return angle_defect_units(mesh, v) * kThirdPi;
}

CurvatureReport curvature_report(const TriMesh& mesh) {
  CurvatureReport report;
  bool have_interior = false;
  for (const auto& rec : mesh.vertices()) {
    const int units = angle_defect_units(mesh, rec.id);
    report.defect_units.push_back(units);
    report.defects.push_back(units * kThirdPi);
    report.total_units += units;
    if (!rec.boundary && !have_interior) {
      report.interior_defect = units * kThirdPi;
      have_interior = true;
    }
  }
  report.total_defect = report.total_units * kThirdPi;
  return report;
}

std::vector<std::size_t> boundary_stats(const TriMesh& mesh) {
  std::vector<std::size_t> out;
  const auto& faces = mesh.faces();
  const auto& layers = mesh.face_layers();
  for (int level = 0; level <= mesh.max_face_layer(); ++level) {
    std::map<Edge, int> uses;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (layers[f] > level) continue;
      for (int e = 0; e < 3; ++e) ++uses[make_edge(faces[f][e], faces[f][(e + 1) % 3])];
    }
    out.push_back(static_cast<std::size_t>(
        std::ranges::count_if(uses, [](const auto& kv) { return kv.second == 1; })));
  }
  return out;
}

int euler_characteristic(const TriMesh& mesh) {
  return static_cast<int>(mesh.vertex_count()) - static_cast<int>(mesh.edge_count()) +
         static_cast<int>(mesh.face_count());
}

std::map<int, std::size_t> degree_histogram(const TriMesh& mesh) {
  std::map<int, std::size_t> hist;
  for (const auto& v : mesh.vertices()) ++hist[mesh.degree(v.id)];
  return hist;
}

}  // namespace hyperflower
