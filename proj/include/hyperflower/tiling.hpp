#pragma once

// Equilateral {3,k} triangle tilings in the Klein disk.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hyperflower/hypmath.hpp"

namespace hyperflower {

enum class GluingName {
  TrianglePillow,
  Tetrahedron,
  Octahedron,
  Icosahedron,
  EuclideanPlane,
  HyperbolicPlane,
};

struct GluingClass {
  int k = 0;
  GluingName name = GluingName::HyperbolicPlane;
};

std::string_view to_string(GluingName name);

/// Name of the object obtained by gluing k equilateral triangles around every vertex.
GluingClass classify_gluing(int k);

/// Equilateral triangle with all angles 2*pi/k.
struct EquilateralSpec {
  int k = 0;
  double vertex_angle = 0.0;
  double edge_length = 0.0;
  double angle_sum = 0.0;
};

EquilateralSpec equilateral_spec(int k);

/// Hyperbolic side length of the triangle with three angles 2*pi/k, k >= 6.
/// k = 6 is the Euclidean degeneration and returns exactly 0.
double edge_length(int k);

/// 6*pi/k, the angle sum of one tile.
double angle_sum(int k);

struct BaseTriangle {
  KleinPoint o;
  KleinPoint a;
  KleinPoint b;
};

/// First-quadrant tile with one corner at the origin and one on the positive x-axis.
BaseTriangle base_triangle(int k);

using Triangle = std::array<std::uint32_t, 3>;

struct TilingVertex {
  KleinPoint point;
  int layer = 0;  ///< edge-graph distance from the origin
};

/// Patch of the {3,k} tiling grown layer by layer from the fan at the origin.
struct TilingPatch {
  int k = 0;
  int layers = 0;
  std::vector<TilingVertex> vertices;
  std::vector<Triangle> triangles;  ///< counterclockwise in Klein coordinates
  std::vector<int> triangle_layers;  ///< edge-adjacency depth from the origin fan
};

struct TilingOptions {
  std::size_t triangle_budget = 1'000'000;
  /// When set, edges are explored in a shuffled order (used to check that
  /// vertex deduplication does not depend on generation order).
  std::optional<std::uint64_t> shuffle_seed;
};

TilingPatch expand_tiling(int k, int layers, const TilingOptions& options = {});

/// Interior angle opposite side a of a hyperbolic triangle with sides a, b, c.
double hyperbolic_angle(double a, double b, double c);

}  // namespace hyperflower
