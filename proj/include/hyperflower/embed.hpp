#pragma once

// Piecewise-linear embedding of a TriMesh in R^3 with every edge close to a
// common target length, found by minimizing sum_e (|p_i - p_j| - target)^2.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperflower/mesh.hpp"
#include "hyperflower/simd/edge_kernels.hpp"
#include "hyperflower/vec3.hpp"

namespace hyperflower {

struct EmbedParams {
  int max_iterations = 50'000;
  double step_size = 0.05;   ///< initial gradient step
  double tolerance = 0.02;   ///< stop once max relative edge distortion is below this
  std::uint64_t seed = 1;
  double jitter_scale = 0.05;
  double target_length = 1.0;
  /// Keep every z coordinate at 0 (in-plane relaxation).
  bool planar = false;
  /// Record the energy after every accepted step in EmbedReport::energy_trace.
  bool record_trace = false;
  /// Kernel variant; simd::active_isa() when unset.
  std::optional<simd::Isa> isa;
};

struct EmbeddingState {
  std::vector<Vec3> positions;
  double target_length = 1.0;
};

struct EmbedReport {
  int iterations_used = 0;
  double final_energy = 0.0;
  double max_relative_distortion = 0.0;
  double bounding_radius = 0.0;
  bool converged = false;
  std::vector<double> energy_trace;  ///< starts with the initial energy
};

/// Seeded starting layout. Disks sit on a shallow cone: layer L on a circle of
/// radius L*target at height -0.1*L*target. Annuli (vertices tagged with a
/// side) start on a flared tube around their central ring. Each coordinate
/// then receives uniform jitter in [-1, 1) * jitter_scale * target.
EmbeddingState init_embedding(const TriMesh& mesh, const EmbedParams& params);

double energy(const TriMesh& mesh, const EmbeddingState& state,
              std::optional<simd::Isa> isa = std::nullopt);

/// Throws DegenerateEdgeError when some edge has coincident endpoints.
std::vector<Vec3> energy_gradient(const TriMesh& mesh, const EmbeddingState& state,
                                  std::optional<simd::Isa> isa = std::nullopt);

/// Gradient descent with backtracking (the step halves, at most 30 times,
/// until the energy does not increase; after an accepted step it grows by
/// 25%). Stops at the distortion tolerance, at max_iterations, or when no
/// halving yields a non-increasing energy. Not converging is reported, not thrown.
std::pair<EmbeddingState, EmbedReport> relax(const TriMesh& mesh, const EmbedParams& params);

/// Same, from a caller-provided starting state.
std::pair<EmbeddingState, EmbedReport> relax_from(const TriMesh& mesh, EmbeddingState start,
                                                  const EmbedParams& params);

/// Distortion and bounding radius (max distance from the centroid) of a state.
EmbedReport embed_report_metrics(const TriMesh& mesh, const EmbeddingState& state,
                                 std::optional<simd::Isa> isa = std::nullopt);

}  // namespace hyperflower
