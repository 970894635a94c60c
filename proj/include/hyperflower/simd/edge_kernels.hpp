#pragma once

// Per-edge arithmetic of the embedding energy, with a scalar reference and
// vector variants picked at runtime. Every variant evaluates the same
// correctly rounded operations in the same order, so results are bitwise
// identical across instruction sets.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "hyperflower/vec3.hpp"

namespace hyperflower::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

/// Whether this binary carries the variant and the CPU can run it.
bool isa_available(Isa isa);

/// Widest available variant.
Isa best_isa();

/// Variant used by default: HYPERFLOWER_ISA=scalar|avx2|neon when set and
/// available, best_isa() otherwise. Read once per process.
Isa active_isa();

/// Structure-of-arrays output, one entry per edge:
///   residual = |p[a] - p[b]| - target
///   f        = 2 * residual * (p[a] - p[b]) / |p[a] - p[b]|
/// f is the gradient of residual^2 with respect to p[a].
struct EdgeTerms {
  std::vector<double> residual;
  std::vector<double> fx;
  std::vector<double> fy;
  std::vector<double> fz;

  void resize(std::size_t n) {
    residual.resize(n);
    fx.resize(n);
    fy.resize(n);
    fz.resize(n);
  }
};

inline constexpr std::size_t kNoDegenerateEdge = std::numeric_limits<std::size_t>::max();

/// Edge lengths at or below this are degenerate.
inline constexpr double kDegenerateLength = 1e-12;

/// Fills `out` for edges (first[e], second[e]). Returns the index of the first
/// degenerate edge, or kNoDegenerateEdge. Entries of degenerate edges are not
/// meaningful.
std::size_t edge_terms(Isa isa, std::span<const Vec3> positions,
                       std::span<const std::uint32_t> first, std::span<const std::uint32_t> second,
                       double target, EdgeTerms& out);

/// max |v[i]|, 0 for an empty span.
double max_abs(Isa isa, std::span<const double> values);

}  // namespace hyperflower::simd
