#include "hyperflower/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <unordered_map>

#include "hyperflower/error.hpp"

namespace hyperflower {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Point of the hyperboloid t^2 - x^2 - y^2 = 1, t > 0.
struct Hyp {
  double t;
  double x;
  double y;
};

double minkowski(const Hyp& a, const Hyp& b) { return -a.t * b.t + a.x * b.x + a.y * b.y; }

Hyp lift(double x, double y) { return {std::sqrt(1.0 + x * x + y * y), x, y}; }

double hyp_distance(const Hyp& a, const Hyp& b) {
  const Hyp d{a.t - b.t, a.x - b.x, a.y - b.y};
  return 2.0 * std::asinh(0.5 * std::sqrt(std::max(0.0, minkowski(d, d))));
}

// Reflection of w in the geodesic through u and v.
Hyp reflect(const Hyp& u, const Hyp& v, const Hyp& w) {
  // Euclidean cross product of (t, x, y) vectors, then flip the time sign so
  // that the result is Minkowski-orthogonal to both u and v.
  const Hyp n{-(u.x * v.y - u.y * v.x), u.y * v.t - u.t * v.y, u.t * v.x - u.x * v.t};
  const double s = 2.0 * minkowski(w, n) / minkowski(n, n);
  // Re-project onto the sheet so rounding does not accumulate across generations.
  return lift(w.x - s * n.x, w.y - s * n.y);
}

KleinPoint to_klein(const Hyp& h) { return {h.x / h.t, h.y / h.t}; }

void require_hyperbolic(int k, const char* what) {
  if (k < 7) throw DomainError(std::string(what) + ": k must be >= 7, got " + std::to_string(k));
}

// Vertex store with a spatial hash on quantized hyperboloid coordinates.
class VertexIndex {
 public:
  static constexpr double kCell = 1e-6;

  std::uint32_t find_or_insert(const Hyp& h, bool& inserted) {
    const auto cx = cell(h.x);
    const auto cy = cell(h.y);
    for (std::int64_t i = cx - 1; i <= cx + 1; ++i) {
      for (std::int64_t j = cy - 1; j <= cy + 1; ++j) {
        const auto it = cells_.find(key(i, j));
        if (it == cells_.end()) continue;
        for (const std::uint32_t id : it->second) {
          if (hyp_distance(points_[id], h) < kPointTolerance) {
            inserted = false;
            return id;
          }
        }
      }
    }
    const auto id = static_cast<std::uint32_t>(points_.size());
    points_.push_back(h);
    cells_[key(cx, cy)].push_back(id);
    inserted = true;
    return id;
  }

  const Hyp& operator[](std::uint32_t id) const { return points_[id]; }
  std::size_t size() const { return points_.size(); }

 private:
  static std::int64_t cell(double v) { return static_cast<std::int64_t>(std::floor(v / kCell)); }
  static std::uint64_t key(std::int64_t i, std::int64_t j) {
    return (static_cast<std::uint64_t>(i) * 0x9E3779B97F4A7C15ULL) ^ static_cast<std::uint64_t>(j);
  }

  std::vector<Hyp> points_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cells_;
};

double signed_area(const KleinPoint& a, const KleinPoint& b, const KleinPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace

std::string_view to_string(GluingName name) {
  switch (name) {
    case GluingName::TrianglePillow: return "triangle pillow";
    case GluingName::Tetrahedron: return "tetrahedron";
    case GluingName::Octahedron: return "octahedron";
    case GluingName::Icosahedron: return "icosahedron";
    case GluingName::EuclideanPlane: return "Euclidean plane";
    case GluingName::HyperbolicPlane: return "hyperbolic plane";
  }
  return "unknown";
}

GluingClass classify_gluing(int k) {
  if (k < 2) throw DomainError("classify_gluing: k must be >= 2, got " + std::to_string(k));
  switch (k) {
    case 2: return {k, GluingName::TrianglePillow};
    case 3: return {k, GluingName::Tetrahedron};
    case 4: return {k, GluingName::Octahedron};
    case 5: return {k, GluingName::Icosahedron};
    case 6: return {k, GluingName::EuclideanPlane};
    default: return {k, GluingName::HyperbolicPlane};
  }
}

double edge_length(int k) {
  if (k < 6) throw DomainError("edge_length: k must be >= 6, got " + std::to_string(k));
  if (k == 6) return 0.0;
  // Hyperbolic law of cosines for angles with A = B = C = alpha:
  //   cosh a = (cos a + cos^2 a) / sin^2 a = cos a / (1 - cos a).
  const double c = std::cos(kTwoPi / k);
  return std::acosh(c / (1.0 - c));
}

double angle_sum(int k) {
  require_hyperbolic(k, "angle_sum");
  return 3.0 * kTwoPi / k;
}

EquilateralSpec equilateral_spec(int k) {
  require_hyperbolic(k, "equilateral_spec");
  return {k, kTwoPi / k, edge_length(k), angle_sum(k)};
}

BaseTriangle base_triangle(int k) {
  require_hyperbolic(k, "base_triangle");
  // The Klein model is conformal at the origin, so the corner there can be
  // laid out with its true angle 2*pi/k.
  const double r = klein_radius_for_distance(edge_length(k));
  const double alpha = kTwoPi / k;
  return {{0.0, 0.0}, {r, 0.0}, {r * std::cos(alpha), r * std::sin(alpha)}};
}

double hyperbolic_angle(double a, double b, double c) {
  const double num = std::cosh(b) * std::cosh(c) - std::cosh(a);
  const double den = std::sinh(b) * std::sinh(c);
  return std::acos(std::clamp(num / den, -1.0, 1.0));
}

TilingPatch expand_tiling(int k, int layers, const TilingOptions& options) {
  require_hyperbolic(k, "expand_tiling");
  if (layers < 0) throw DomainError("expand_tiling: layers must be >= 0");

  const double a = edge_length(k);
  VertexIndex index;
  bool inserted = false;
  index.find_or_insert({1.0, 0.0, 0.0}, inserted);
  for (int j = 0; j < k; ++j) {
    const double phi = kTwoPi * j / k;
    index.find_or_insert(lift(std::sinh(a) * std::cos(phi), std::sinh(a) * std::sin(phi)),
                         inserted);
  }

  TilingPatch patch;
  patch.k = k;
  patch.layers = layers;
  std::map<Triangle, std::uint32_t> seen;
  std::deque<std::uint32_t> queue;

  const auto add_triangle = [&](Triangle tri, int depth) -> bool {
    Triangle sorted = tri;
    std::sort(sorted.begin(), sorted.end());
    if (seen.contains(sorted)) return false;
    if (patch.triangles.size() >= options.triangle_budget) {
      throw ResourceError("expand_tiling: triangle budget of " +
                          std::to_string(options.triangle_budget) + " exceeded");
    }
    if (signed_area(to_klein(index[tri[0]]), to_klein(index[tri[1]]), to_klein(index[tri[2]])) <
        0.0) {
      std::swap(tri[1], tri[2]);
    }
    const auto id = static_cast<std::uint32_t>(patch.triangles.size());
    seen.emplace(sorted, id);
    patch.triangles.push_back(tri);
    patch.triangle_layers.push_back(depth);
    queue.push_back(id);
    return true;
  };

  for (int j = 0; j < k; ++j) {
    add_triangle({0u, static_cast<std::uint32_t>(1 + j), static_cast<std::uint32_t>(1 + (j + 1) % k)},
                 0);
  }

  std::mt19937_64 rng(options.shuffle_seed.value_or(0));
  std::array<int, 3> order{0, 1, 2};
  while (!queue.empty()) {
    const std::uint32_t t = queue.front();
    queue.pop_front();
    const int depth = patch.triangle_layers[t];
    if (depth >= layers) continue;
    const Triangle tri = patch.triangles[t];
    if (options.shuffle_seed) std::shuffle(order.begin(), order.end(), rng);
    for (const int e : order) {
      const std::uint32_t u = tri[e];
      const std::uint32_t v = tri[(e + 1) % 3];
      const std::uint32_t w = tri[(e + 2) % 3];
      const Hyp image = reflect(index[u], index[v], index[w]);
      const KleinPoint kp = to_klein(image);
      if (std::hypot(kp.x, kp.y) > 1.0 - kPointTolerance) {
        throw DomainError("expand_tiling: layer " + std::to_string(depth + 1) +
                          " reaches the numerical boundary of the disk");
      }
      const std::uint32_t x = index.find_or_insert(image, inserted);
      add_triangle({u, v, x}, depth + 1);
    }
  }

  patch.vertices.resize(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) patch.vertices[i].point = to_klein(index[i]);

  // Vertex layers: breadth-first distance from the origin along edges.
  std::vector<std::vector<std::uint32_t>> adjacency(index.size());
  for (const auto& tri : patch.triangles) {
    for (int e = 0; e < 3; ++e) {
      adjacency[tri[e]].push_back(tri[(e + 1) % 3]);
      adjacency[tri[(e + 1) % 3]].push_back(tri[e]);
    }
  }
  std::vector<int> dist(index.size(), -1);
  std::deque<std::uint32_t> frontier{0};
  dist[0] = 0;
  while (!frontier.empty()) {
    const auto v = frontier.front();
    frontier.pop_front();
    for (const auto n : adjacency[v]) {
      if (dist[n] < 0) {
        dist[n] = dist[v] + 1;
        frontier.push_back(n);
      }
    }
  }
  for (std::size_t i = 0; i < index.size(); ++i) patch.vertices[i].layer = dist[i];
  return patch;
}

}  // namespace hyperflower
