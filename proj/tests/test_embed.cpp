#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <numbers>

#include "hyperflower/cylinder.hpp"
#include "hyperflower/embed.hpp"
#include "hyperflower/error.hpp"
#include "hyperflower/mesh.hpp"
#include "hyperflower/tiling.hpp"

using namespace hyperflower;

namespace {

double brute_energy(const TriMesh& m, const EmbeddingState& s) {
  double e = 0.0;
  for (const auto& edge : m.edges()) {
    const double r = norm(s.positions[edge.a] - s.positions[edge.b]) - s.target_length;
    e += r * r;
  }
  return e;
}

double brute_distortion(const TriMesh& m, const EmbeddingState& s) {
  double worst = 0.0;
  for (const auto& edge : m.edges()) {
    worst = std::max(worst, std::abs(norm(s.positions[edge.a] - s.positions[edge.b]) - s.target_length) /
                                s.target_length);
  }
  return worst;
}

Vec3 rotate(const Vec3& v, const Vec3& axis, double angle) {
  const Vec3 k = axis * (1.0 / norm(axis));
  return v * std::cos(angle) + cross(k, v) * std::sin(angle) + k * (dot(k, v) * (1.0 - std::cos(angle)));
}

EmbeddingState single_triangle_state(Vec3 a, Vec3 b, Vec3 c) { return {{a, b, c}, 1.0}; }

const TriMesh& single_triangle() {
  static const TriMesh m = TriMesh::from_faces(3, {{0, 1, 2}});
  return m;
}

}  // namespace

TEST(InitEmbedding, Deterministic) {
  const auto m = build_disk(7, 2);
  EmbedParams p;
  p.seed = 11;
  const auto a = init_embedding(m, p);
  const auto b = init_embedding(m, p);
  ASSERT_EQ(a.positions.size(), m.vertex_count());
  for (std::size_t i = 0; i < a.positions.size(); ++i) {
    EXPECT_EQ(std::bit_cast<std::uint64_t>(a.positions[i].x), std::bit_cast<std::uint64_t>(b.positions[i].x));
    EXPECT_EQ(a.positions[i], b.positions[i]);
  }
  p.seed = 12;
  const auto c = init_embedding(m, p);
  EXPECT_NE(a.positions[0], c.positions[0]);
}

TEST(InitEmbedding, ZeroJitterIgnoresSeed) {
  const auto m = build_disk(7, 1);
  EmbedParams p;
  p.jitter_scale = 0.0;
  p.seed = 1;
  const auto a = init_embedding(m, p);
  p.seed = 99;
  const auto b = init_embedding(m, p);
  for (std::size_t i = 0; i < a.positions.size(); ++i) EXPECT_EQ(a.positions[i], b.positions[i]);
  EXPECT_EQ(a.positions[0], (Vec3{0, 0, 0}));
  for (const auto& v : m.vertices()) {
    const Vec3& q = a.positions[v.id];
    EXPECT_NEAR(std::hypot(q.x, q.y), v.layer, 1e-12);
    EXPECT_NEAR(q.z, -0.1 * v.layer, 1e-12);
  }
}

TEST(InitEmbedding, PlanarHasZeroHeight) {
  const auto m = build_disk(7, 2);
  EmbedParams p;
  p.planar = true;
  for (const auto& q : init_embedding(m, p).positions) EXPECT_EQ(q.z, 0.0);
}

TEST(Energy, Values) {
  EXPECT_EQ(energy(single_triangle(), single_triangle_state({0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2, 0})),
            brute_energy(single_triangle(), single_triangle_state({0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2, 0})));
  // Collinear: edges of length 2, 1, 1.
  const auto s = single_triangle_state({0, 0, 0}, {2, 0, 0}, {1, 0, 0});
  EXPECT_DOUBLE_EQ(energy(single_triangle(), s), 1.0);

  const auto m = build_disk(7, 2);
  EmbedParams p;
  p.seed = 5;
  p.jitter_scale = 0.3;
  const auto state = init_embedding(m, p);
  EXPECT_NEAR(energy(m, state), brute_energy(m, state), 1e-12 * brute_energy(m, state));
}

TEST(Energy, ZeroAtExactTriangleAndGradientVanishes) {
  const double h = std::sqrt(3.0) / 2.0;
  const auto s = single_triangle_state({0, 0, 0}, {1, 0, 0}, {0.5, h, 0});
  EXPECT_NEAR(energy(single_triangle(), s), 0.0, 1e-30);
  for (const auto& g : energy_gradient(single_triangle(), s)) EXPECT_LT(norm(g), 1e-15);
}

TEST(Gradient, StretchedEdgePullsEndpointsTogether) {
  const auto s = single_triangle_state({0, 0, 0}, {2, 0, 0}, {1, 0, 0});
  const auto g = energy_gradient(single_triangle(), s);
  EXPECT_EQ(g[0].x, -g[1].x);
  EXPECT_LT(g[0].x, 0.0);  // descent moves vertex 0 towards vertex 1
  EXPECT_NEAR(g[0].x, -2.0, 1e-15);
  EXPECT_EQ(norm(g[2]), 0.0);
}

TEST(Gradient, MatchesCentralDifferences) {
  const auto m = build_disk(7, 1);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    EmbedParams p;
    p.seed = seed;
    p.jitter_scale = 0.2;
    auto state = init_embedding(m, p);
    const auto grad = energy_gradient(m, state);
    double max_err = 0.0;
    double max_g = 0.0;
    const double h = 1e-6;
    for (std::size_t i = 0; i < state.positions.size(); ++i) {
      for (int c = 0; c < 3; ++c) {
        double* coord = c == 0 ? &state.positions[i].x : c == 1 ? &state.positions[i].y : &state.positions[i].z;
        const double saved = *coord;
        *coord = saved + h;
        const double up = brute_energy(m, state);
        *coord = saved - h;
        const double down = brute_energy(m, state);
        *coord = saved;
        const double fd = (up - down) / (2.0 * h);
        const double an = c == 0 ? grad[i].x : c == 1 ? grad[i].y : grad[i].z;
        max_err = std::max(max_err, std::abs(fd - an));
        max_g = std::max(max_g, std::abs(an));
      }
    }
    EXPECT_LT(max_err / max_g, 1e-5) << "seed " << seed;
  }
}

TEST(Energy, RigidMotionInvariance) {
  const auto m = build_disk(7, 2);
  EmbedParams p;
  p.seed = 3;
  p.jitter_scale = 0.2;
  const auto state = init_embedding(m, p);
  const auto grad = energy_gradient(m, state);
  const Vec3 axis{0.3, -1.0, 0.5};
  const double angle = 0.7;
  const Vec3 shift{4.0, -2.0, 1.0};
  EmbeddingState moved = state;
  for (auto& q : moved.positions) q = rotate(q, axis, angle) + shift;
  EXPECT_NEAR(energy(m, moved), energy(m, state), 1e-10);
  const auto grad_moved = energy_gradient(m, moved);
  for (std::size_t i = 0; i < grad.size(); ++i) {
    EXPECT_LT(norm(grad_moved[i] - rotate(grad[i], axis, angle)), 1e-9);
  }
}

TEST(Gradient, DegenerateEdgeThrows) {
  const auto s = single_triangle_state({0, 0, 0}, {0, 0, 0}, {1, 0, 0});
  EXPECT_THROW(energy_gradient(single_triangle(), s), DegenerateEdgeError);
}

TEST(Relax, SingleTriangleReachesExactShape) {
  EmbedParams p;
  p.tolerance = 1e-9;
  p.max_iterations = 20000;
  const auto [state, report] = relax(single_triangle(), p);
  EXPECT_TRUE(report.converged);
  EXPECT_LT(report.max_relative_distortion, 1e-8);
  EXPECT_LT(brute_distortion(single_triangle(), state), 1e-8);
}

TEST(Relax, DiskConvergesWithNonIncreasingEnergy) {
  const auto m = build_disk(7, 2);
  EmbedParams p;
  p.record_trace = true;
  const auto [state, report] = relax(m, p);
  EXPECT_TRUE(report.converged);
  EXPECT_LT(report.max_relative_distortion, 0.02);
  EXPECT_EQ(report.max_relative_distortion, brute_distortion(m, state));
  ASSERT_EQ(report.energy_trace.size(), static_cast<std::size_t>(report.iterations_used) + 1);
  for (std::size_t i = 1; i < report.energy_trace.size(); ++i) {
    EXPECT_LE(report.energy_trace[i], report.energy_trace[i - 1]);
  }
  EXPECT_EQ(report.final_energy, report.energy_trace.back());
}

TEST(Relax, FlatLayoutCannotMatchUnitEdges) {
  // Seven unit equilateral triangles around a vertex need 420 degrees; in the
  // plane the distortion stays large while space allows a ruffled fit.
  const auto m = build_disk(7, 1);
  EmbedParams p;
  p.max_iterations = 5000;
  const auto [flat_state, flat] = relax(m, [&] {
    EmbedParams q = p;
    q.planar = true;
    return q;
  }());
  const auto [space_state, space] = relax(m, p);
  for (const auto& q : flat_state.positions) EXPECT_EQ(q.z, 0.0);
  EXPECT_FALSE(flat.converged);
  EXPECT_GT(flat.max_relative_distortion, 0.05);
  EXPECT_TRUE(space.converged);
  EXPECT_LT(space.max_relative_distortion, p.tolerance);
}

TEST(Relax, SameResultForEveryInstructionSet) {
  const auto m = build_disk(7, 2);
  EmbedParams p;
  p.isa = simd::Isa::Scalar;
  const auto [ref_state, ref] = relax(m, p);
  for (const auto isa : {simd::Isa::Avx2, simd::Isa::Neon}) {
    if (!simd::isa_available(isa)) continue;
    p.isa = isa;
    const auto [state, report] = relax(m, p);
    EXPECT_EQ(report.iterations_used, ref.iterations_used);
    EXPECT_EQ(report.final_energy, ref.final_energy);
    for (std::size_t i = 0; i < state.positions.size(); ++i) EXPECT_EQ(state.positions[i], ref_state.positions[i]);
  }
}

TEST(Relax, BoundingRadiusGrowsSlowerThanTheBoundary) {
  std::vector<double> radius;
  std::vector<double> boundary;
  for (int layers = 1; layers <= 3; ++layers) {
    const auto m = build_disk(7, layers);
    const auto [state, report] = relax(m, EmbedParams{});
    EXPECT_TRUE(report.converged) << layers;
    if (!radius.empty()) {
      EXPECT_GT(report.bounding_radius, radius.back());
    }
    radius.push_back(report.bounding_radius);
    boundary.push_back(static_cast<double>(boundary_stats(m).back()));
  }
  EXPECT_LT(radius.back() / radius.front(), boundary.back() / boundary.front());
}

TEST(Relax, CylinderMeshWithHyperbolicTarget) {
  const auto m = build_cylinder_mesh(2, 8);
  EmbedParams p;
  p.target_length = edge_length(8);
  p.max_iterations = 20000;
  const auto [state, report] = relax(m, p);
  EXPECT_EQ(state.positions.size(), m.vertex_count());
  EXPECT_LT(report.max_relative_distortion, 0.05);
}

TEST(Relax, ParameterValidation) {
  const auto m = build_disk(7, 0);
  EmbedParams p;
  p.target_length = 0.0;
  EXPECT_THROW(relax(m, p), DomainError);
  p = {};
  p.max_iterations = -1;
  EXPECT_THROW(relax(m, p), DomainError);
  p = {};
  EXPECT_THROW(relax_from(m, EmbeddingState{{{0, 0, 0}}, 1.0}, p), DomainError);
}
