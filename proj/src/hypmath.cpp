#include "hyperflower/hypmath.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyperflower/error.hpp"

namespace hyperflower {
namespace {

// 1 - |p|^2 for a model point, after the boundary clamp.
double conformal_gap(double norm_sq, const char* what) {
  if (!std::isfinite(norm_sq) || norm_sq >= 1.0) {
    throw DomainError(std::string(what) + ": point outside the open unit ball (|p|^2 = " +
                      std::to_string(norm_sq) + ")");
  }
  constexpr double max_norm = 1.0 - kBoundaryMargin;
  const double n = std::min(std::sqrt(norm_sq), max_norm);
  return (1.0 - n) * (1.0 + n);
}

}  // namespace

IdealEndpoint IdealEndpoint::make(const Vec3& unit) {
  const double n = norm(unit);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kIdealTolerance) {
    throw DomainError("ideal endpoint must be a unit vector");
  }
  return IdealEndpoint(unit);
}

IdealEndpoint IdealEndpoint::from_direction(const Vec3& direction) {
  const double n = norm(direction);
  if (!std::isfinite(n) || n == 0.0) {
    throw DomainError("ideal endpoint direction must be finite and non-zero");
  }
  return IdealEndpoint(direction / n);
}

Geodesic3 Geodesic3::make(const IdealEndpoint& e1, const IdealEndpoint& e2) {
  if (norm(e1.u() - e2.u()) <= kPointTolerance) {
    throw DomainError("geodesic endpoints coincide");
  }
  return Geodesic3(e1, e2);
}

Geodesic3 Geodesic3::z_axis() {
  return make(IdealEndpoint::make({0, 0, -1}), IdealEndpoint::make({0, 0, 1}));
}

double klein_distance(const KleinPoint& p, const KleinPoint& q) {
  // Lift both points to the hyperboloid and use
  //   <X - Y, X - Y> = 4 sinh^2(d / 2),
  // which stays accurate for nearby points where acosh of the cosine form does not.
  const double sp = std::sqrt(conformal_gap(p.x * p.x + p.y * p.y, "klein_distance"));
  const double sq = std::sqrt(conformal_gap(q.x * q.x + q.y * q.y, "klein_distance"));
  const double dt = 1.0 / sp - 1.0 / sq;
  const double dx = p.x / sp - q.x / sq;
  const double dy = p.y / sp - q.y / sq;
  const double m = std::max(0.0, dx * dx + dy * dy - dt * dt);
  return 2.0 * std::asinh(0.5 * std::sqrt(m));
}

double klein_radius_for_distance(double d) {
  if (!(d >= 0.0)) throw DomainError("klein_radius_for_distance: distance must be >= 0");
  return std::tanh(d);
}

PoincarePoint klein_to_poincare(const KleinPoint& p) {
  const double gap = conformal_gap(p.x * p.x + p.y * p.y, "klein_to_poincare");
  const double s = 1.0 / (1.0 + std::sqrt(gap));
  return {p.x * s, p.y * s};
}

KleinPoint poincare_to_klein(const PoincarePoint& p) {
  const double n2 = p.x * p.x + p.y * p.y;
  conformal_gap(n2, "poincare_to_klein");
  const double s = 2.0 / (1.0 + n2);
  return {p.x * s, p.y * s};
}

double poincare_distance(const PoincarePoint& p, const PoincarePoint& q) {
  const double gp = conformal_gap(p.x * p.x + p.y * p.y, "poincare_distance");
  const double gq = conformal_gap(q.x * q.x + q.y * q.y, "poincare_distance");
  const double e = std::hypot(p.x - q.x, p.y - q.y);
  return 2.0 * std::asinh(e / std::sqrt(gp * gq));
}

double ball_distance(const BallPoint& p, const BallPoint& q) {
  // cosh d = 1 + 2|p-q|^2 / ((1-|p|^2)(1-|q|^2))  <=>  sinh(d/2) = |p-q| / sqrt(...)
  const double gp = conformal_gap(norm2(p.vec()), "ball_distance");
  const double gq = conformal_gap(norm2(q.vec()), "ball_distance");
  const double e = norm(p.vec() - q.vec());
  return 2.0 * std::asinh(e / std::sqrt(gp * gq));
}

BallPoint rotate_about_z(const BallPoint& p, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * p.x - s * p.y, s * p.x + c * p.y, p.z};
}

BallPoint klein_ball_to_poincare(const Vec3& k) {
  const double gap = conformal_gap(norm2(k), "klein_ball_to_poincare");
  return BallPoint::from(k / (1.0 + std::sqrt(gap)));
}

double distance_to_z_axis(const BallPoint& p) {
  // Hyperboloid lift X = (1 + |p|^2, 2p) / (1 - |p|^2); the distance to the
  // (t, z)-plane geodesic satisfies sinh d = sqrt(X_x^2 + X_y^2).
  const double gap = conformal_gap(norm2(p.vec()), "distance_to_z_axis");
  return std::asinh(2.0 * std::hypot(p.x, p.y) / gap);
}

}  // namespace hyperflower
