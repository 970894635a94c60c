#pragma once

// Surfaces of revolution in the Poincare ball: a generator geodesic rotated
// about the z-diameter, and the neck where it comes closest to the axis.

#include <cstddef>
#include <functional>
#include <vector>

#include "hyperflower/hypmath.hpp"
#include "hyperflower/mesh.hpp"

namespace hyperflower {

/// Point of g at chord parameter t in (0, 1). The parameter runs linearly
/// along the Euclidean chord between the ideal endpoints, which is the
/// geodesic in the Klein ball, and is then mapped to the Poincare ball.
BallPoint generator_point(const Geodesic3& g, double t);

/// Hyperbolic distance from generator_point(g, t) to the z-axis geodesic.
double distance_to_axis(const Geodesic3& g, double t);

/// Rotates both ideal endpoints about the z-diameter.
Geodesic3 rotate_about_z(const Geodesic3& g, double theta);

/// Generator rotated about the z-diameter (the axis is always the z-diameter).
class CylinderSurface {
 public:
  /// Rejects generators that share an ideal endpoint with the axis or meet it.
  static CylinderSurface make(const Geodesic3& generator);

  /// Moves an arbitrary axis onto the z-diameter by an isometry of the ball
  /// (a boost taking the axis through the origin, then a rotation) and
  /// carries the generator along.
  static CylinderSurface normalize(const Geodesic3& axis, const Geodesic3& generator);

  const Geodesic3& axis() const { return axis_; }
  const Geodesic3& generator() const { return generator_; }

 private:
  CylinderSurface(const Geodesic3& axis, const Geodesic3& generator)
      : axis_(axis), generator_(generator) {}
  Geodesic3 axis_;
  Geodesic3 generator_;
};

struct NeckCircle {
  double height = 0.0;             ///< z of the neck plane in the ball
  double hyperbolic_radius = 0.0;  ///< distance from the axis
  double circumference = 0.0;      ///< 2*pi*sinh(hyperbolic_radius)
  double parameter = 0.5;          ///< chord parameter of the foot on the generator
  BallPoint foot;
};

/// Neck of the cylinder: golden-section minimum of distance_to_axis, to 1e-10 in t.
NeckCircle neck(const CylinderSurface& c);

BallPoint surface_point(const CylinderSurface& c, double t, double theta);

struct ProfileSample {
  double t = 0.0;
  double distance = 0.0;
};

/// distance_to_axis on `samples` interior points t = (i + 1) / (samples + 1).
std::vector<ProfileSample> neck_profile(const Geodesic3& g, int samples);

struct SampledSurface {
  TriMesh mesh;  ///< open annulus grid, layer = t index, ring_position = theta index / theta_samples
  std::vector<Vec3> positions;
};

/// Grid of surface points for t in [t_margin, 1 - t_margin] and a full turn in theta.
SampledSurface sample_surface(const CylinderSurface& c, int t_samples, int theta_samples,
                              double t_margin = 0.02);

/// argmin of a unimodal f on [lo, hi], to `tolerance` in the argument.
double golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                               double tolerance);

/// Combinatorial annulus in which every interior vertex meets 8 triangles:
/// a central ring of neck_count vertices with rows_per_side rings grown on
/// each side. Vertices carry layer = ring distance from the neck and side = +1/-1.
TriMesh build_cylinder_mesh(int rows_per_side, int neck_count,
                            std::size_t triangle_budget = 1'000'000);

}  // namespace hyperflower
