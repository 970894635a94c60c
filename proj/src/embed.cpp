#include "hyperflower/embed.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "hyperflower/error.hpp"

namespace hyperflower {
namespace {

constexpr int kMaxHalvings = 30;
constexpr double kStepGrowth = 1.25;

// Edge endpoint arrays plus kernel scratch for one mesh.
class EdgeWorkspace {
 public:
  EdgeWorkspace(const TriMesh& mesh, std::optional<simd::Isa> isa)
      : isa_(isa.value_or(simd::active_isa())) {
    first_.reserve(mesh.edge_count());
    second_.reserve(mesh.edge_count());
    for (const auto& e : mesh.edges()) {
      first_.push_back(e.a);
      second_.push_back(e.b);
    }
  }

  // Returns the first degenerate edge (or simd::kNoDegenerateEdge).
  std::size_t evaluate(const EmbeddingState& state) {
    if (state.positions.size() < vertex_bound()) {
      throw DomainError("embedding state has fewer positions than the mesh has vertices");
    }
    return simd::edge_terms(isa_, state.positions, first_, second_, state.target_length, terms_);
  }

  double energy() const {
    double sum = 0.0;
    for (const double r : terms_.residual) sum += r * r;
    return sum;
  }

  double max_relative_distortion(double target) const {
    return simd::max_abs(isa_, terms_.residual) / target;
  }

  void accumulate_gradient(std::vector<Vec3>& grad) const {
    for (std::size_t e = 0; e < first_.size(); ++e) {
      const Vec3 f{terms_.fx[e], terms_.fy[e], terms_.fz[e]};
      grad[first_[e]] += f;
      grad[second_[e]] -= f;
    }
  }

  std::uint32_t endpoint(std::size_t e) const { return first_[e]; }

 private:
  std::size_t vertex_bound() const {
    std::uint32_t m = 0;
    for (const auto v : second_) m = std::max(m, v);
    return first_.empty() ? 0 : m + 1;
  }

  simd::Isa isa_;
  std::vector<std::uint32_t> first_;
  std::vector<std::uint32_t> second_;
  simd::EdgeTerms terms_;
};

void check_state(const TriMesh& mesh, const EmbeddingState& state) {
  if (state.positions.size() != mesh.vertex_count()) {
    throw DomainError("embedding state has " + std::to_string(state.positions.size()) +
                      " positions for a mesh with " + std::to_string(mesh.vertex_count()) +
                      " vertices");
  }
  if (!(state.target_length > 0.0)) throw DomainError("target length must be > 0");
}

void check_params(const EmbedParams& p) {
  if (p.max_iterations < 0) throw DomainError("max_iterations must be >= 0");
  if (!(p.step_size > 0.0)) throw DomainError("step_size must be > 0");
  if (!(p.tolerance > 0.0)) throw DomainError("tolerance must be > 0");
  if (!(p.jitter_scale >= 0.0)) throw DomainError("jitter_scale must be >= 0");
  if (!(p.target_length > 0.0)) throw DomainError("target_length must be > 0");
}

// Uniform double in [-1, 1) from the raw 64-bit stream (independent of the
// standard library's distribution implementations).
double symmetric_unit(std::mt19937_64& rng) {
  return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
}

[[noreturn]] void throw_degenerate(std::size_t e, std::uint32_t v) {
  throw DegenerateEdgeError("edge " + std::to_string(e) + " at vertex " + std::to_string(v) +
                            " has coincident endpoints");
}

}  // namespace

EmbeddingState init_embedding(const TriMesh& mesh, const EmbedParams& params) {
  check_params(params);
  const double target = params.target_length;
  EmbeddingState state;
  state.target_length = target;
  state.positions.resize(mesh.vertex_count());

  const bool annulus = mesh.is_annulus();
  double tube_radius = 0.0;
  if (annulus) {
    const auto ring0 = std::ranges::count_if(mesh.vertices(),
                                             [](const VertexRecord& v) { return v.layer == 0; });
    tube_radius = static_cast<double>(std::max<std::ptrdiff_t>(ring0, 3)) * target /
                  (2.0 * std::numbers::pi);
  }

  std::mt19937_64 rng(params.seed);
  for (const auto& v : mesh.vertices()) {
    const double phi = 2.0 * std::numbers::pi * v.ring_position;
    const double layer = static_cast<double>(v.layer);
    double radius = layer * target;
    double height = -0.1 * layer * target;
    if (annulus) {
      radius = tube_radius + 0.5 * layer * target;
      height = 0.75 * v.side * layer * target;
    }
    const double jx = symmetric_unit(rng);
    const double jy = symmetric_unit(rng);
    const double jz = symmetric_unit(rng);
    const double j = params.jitter_scale * target;
    Vec3 p{radius * std::cos(phi) + j * jx, radius * std::sin(phi) + j * jy, height + j * jz};
    if (params.planar) p.z = 0.0;
    state.positions[v.id] = p;
  }
  return state;
}

double energy(const TriMesh& mesh, const EmbeddingState& state, std::optional<simd::Isa> isa) {
  check_state(mesh, state);
  EdgeWorkspace ws(mesh, isa);
  ws.evaluate(state);
  return ws.energy();
}

std::vector<Vec3> energy_gradient(const TriMesh& mesh, const EmbeddingState& state,
                                  std::optional<simd::Isa> isa) {
  check_state(mesh, state);
  EdgeWorkspace ws(mesh, isa);
  const auto bad = ws.evaluate(state);
  if (bad != simd::kNoDegenerateEdge) throw_degenerate(bad, ws.endpoint(bad));
  std::vector<Vec3> grad(mesh.vertex_count());
  ws.accumulate_gradient(grad);
  return grad;
}

std::pair<EmbeddingState, EmbedReport> relax(const TriMesh& mesh, const EmbedParams& params) {
  return relax_from(mesh, init_embedding(mesh, params), params);
}

std::pair<EmbeddingState, EmbedReport> relax_from(const TriMesh& mesh, EmbeddingState start,
                                                  const EmbedParams& params) {
  check_params(params);
  check_state(mesh, start);
  EdgeWorkspace ws(mesh, params.isa);
  EmbeddingState state = std::move(start);
  EmbedReport report;

  // The workspace always holds the terms of `state` at the top of the loop.
  std::size_t bad = ws.evaluate(state);
  double current = ws.energy();
  double distortion = ws.max_relative_distortion(state.target_length);
  if (params.record_trace) report.energy_trace.push_back(current);

  double step = params.step_size;
  std::vector<Vec3> grad(mesh.vertex_count());
  EmbeddingState trial = state;
  int it = 0;
  for (; it < params.max_iterations; ++it) {
    if (distortion < params.tolerance) break;

    std::ranges::fill(grad, Vec3{});
    if (bad != simd::kNoDegenerateEdge) throw_degenerate(bad, ws.endpoint(bad));
    ws.accumulate_gradient(grad);
    if (params.planar) {
      for (auto& g : grad) g.z = 0.0;
    }

    bool accepted = false;
    double trial_energy = current;
    std::size_t trial_bad = simd::kNoDegenerateEdge;
    for (int h = 0; h <= kMaxHalvings; ++h) {
      for (std::size_t i = 0; i < grad.size(); ++i) {
        trial.positions[i] = state.positions[i] - step * grad[i];
      }
      trial_bad = ws.evaluate(trial);
      trial_energy = ws.energy();
      if (trial_energy <= current) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    std::swap(state.positions, trial.positions);
    current = trial_energy;
    bad = trial_bad;
    distortion = ws.max_relative_distortion(state.target_length);
    if (params.record_trace) report.energy_trace.push_back(current);
    step *= kStepGrowth;
  }

  const auto metrics = embed_report_metrics(mesh, state, params.isa);
  report.iterations_used = it;
  report.final_energy = current;
  report.max_relative_distortion = metrics.max_relative_distortion;
  report.bounding_radius = metrics.bounding_radius;
  report.converged = report.max_relative_distortion < params.tolerance;
  return {std::move(state), std::move(report)};
}

EmbedReport embed_report_metrics(const TriMesh& mesh, const EmbeddingState& state,
                                 std::optional<simd::Isa> isa) {
  check_state(mesh, state);
  EdgeWorkspace ws(mesh, isa);
  ws.evaluate(state);
  EmbedReport report;
  report.final_energy = ws.energy();
  report.max_relative_distortion = ws.max_relative_distortion(state.target_length);

  Vec3 centroid{};
  for (const auto& p : state.positions) centroid += p;
  if (!state.positions.empty()) centroid = centroid / static_cast<double>(state.positions.size());
  for (const auto& p : state.positions) {
    report.bounding_radius = std::max(report.bounding_radius, norm(p - centroid));
  }
  return report;
}

}  // namespace hyperflower
