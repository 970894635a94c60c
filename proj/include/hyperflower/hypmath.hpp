#pragma once

// Point types and distances in the Beltrami-Klein disk and the Poincare
// ball. Every function is pure; invalid points raise DomainError.

#include "hyperflower/vec3.hpp"

namespace hyperflower {

/// Two model points closer than this (Euclidean, model coordinates) are the same point.
inline constexpr double kPointTolerance = 1e-9;

/// Norms in (1 - kBoundaryMargin, 1) are pulled back to 1 - kBoundaryMargin.
inline constexpr double kBoundaryMargin = 1e-12;

/// Tolerance on the norm of an ideal endpoint.
inline constexpr double kIdealTolerance = 1e-12;

/// Point of the projective (Beltrami-Klein) disk. Geodesics are chords.
struct KleinPoint {
  double x = 0.0;
  double y = 0.0;
  constexpr bool operator==(const KleinPoint&) const = default;
};

/// Point of the Poincare disk (2D conformal model).
struct PoincarePoint {
  double x = 0.0;
  double y = 0.0;
  constexpr bool operator==(const PoincarePoint&) const = default;
};

/// Point of the Poincare ball model of hyperbolic 3-space.
struct BallPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 vec() const { return {x, y, z}; }
  static constexpr BallPoint from(const Vec3& v) { return {v.x, v.y, v.z}; }
  constexpr bool operator==(const BallPoint&) const = default;
};

/// Point on the sphere at infinity.
class IdealEndpoint {
 public:
  /// Accepts a vector of norm 1 (within kIdealTolerance).
  static IdealEndpoint make(const Vec3& unit);
  /// Normalizes any non-zero direction.
  static IdealEndpoint from_direction(const Vec3& direction);

  const Vec3& u() const { return u_; }

 private:
  explicit IdealEndpoint(const Vec3& u) : u_(u) {}
  Vec3 u_;
};

/// Complete geodesic of the ball given by its two ideal endpoints.
class Geodesic3 {
 public:
  static Geodesic3 make(const IdealEndpoint& e1, const IdealEndpoint& e2);

  /// The z-diameter, from the south pole to the north pole.
  static Geodesic3 z_axis();

  const IdealEndpoint& e1() const { return e1_; }
  const IdealEndpoint& e2() const { return e2_; }

 private:
  Geodesic3(const IdealEndpoint& a, const IdealEndpoint& b) : e1_(a), e2_(b) {}
  IdealEndpoint e1_;
  IdealEndpoint e2_;
};

double klein_distance(const KleinPoint& p, const KleinPoint& q);

/// Euclidean radius r of the Klein point (r, 0) at hyperbolic distance d from the origin.
double klein_radius_for_distance(double d);

PoincarePoint klein_to_poincare(const KleinPoint& p);
KleinPoint poincare_to_klein(const PoincarePoint& p);

double poincare_distance(const PoincarePoint& p, const PoincarePoint& q);

double ball_distance(const BallPoint& p, const BallPoint& q);

/// Rotation by theta about the z-diameter (a hyperbolic isometry).
BallPoint rotate_about_z(const BallPoint& p, double theta);

/// Maps a point of the Klein ball (chord model of H^3) to the Poincare ball.
BallPoint klein_ball_to_poincare(const Vec3& k);

/// Hyperbolic distance from p to the z-diameter geodesic.
double distance_to_z_axis(const BallPoint& p);

}  // namespace hyperflower
