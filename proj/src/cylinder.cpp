#include "hyperflower/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hyperflower/error.hpp"
#include "ring_growth.hpp"

namespace hyperflower {
namespace {

constexpr int kCylinderDegree = 8;
constexpr int kTrianglesPerSideAtNeck = kCylinderDegree / 2;
constexpr double kNeckTolerance = 1e-10;
constexpr double kNeckPolishWindow = 1e-6;

const Vec3 kNorthPole{0, 0, 1};
const Vec3 kSouthPole{0, 0, -1};

// Rotation taking unit vector `from` to unit vector `to`.
struct Rotation {
  Vec3 axis;
  double c = 1.0;
  double s = 0.0;

  static Rotation between(const Vec3& from, const Vec3& to) {
    const Vec3 a = cross(from, to);
    const double s = norm(a);
    const double c = dot(from, to);
    if (s < 1e-15) {
      if (c > 0.0) return {};
      // Half turn about any axis perpendicular to `from`.
      Vec3 perp = std::abs(from.x) < 0.9 ? cross(from, {1, 0, 0}) : cross(from, {0, 1, 0});
      return {perp / norm(perp), -1.0, 0.0};
    }
    return {a / s, c, s};
  }

  Vec3 apply(const Vec3& v) const {
    if (s == 0.0 && c == 1.0) return v;
    // Rodrigues.
    return v * c + cross(axis, v) * s + axis * (dot(axis, v) * (1.0 - c));
  }
};

// Lorentz boost moving the Klein point m to the origin, acting on ideal points.
Vec3 boost_ideal(const Vec3& m, const Vec3& u) {
  const double m2 = norm2(m);
  if (m2 == 0.0) return u;
  const double gamma = 1.0 / std::sqrt(1.0 - m2);
  const double mu = dot(m, u);
  // Light-like vector (1, u).
  const double t = gamma * (1.0 - mu);
  const Vec3 x = u + m * ((gamma - 1.0) * mu / m2 - gamma);
  return x / t;
}

void check_parameter(double t, const char* what) {
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError(std::string(what) + ": parameter must lie in the open interval (0, 1)");
  }
}

// Golden-section search on a quadratic minimum stalls near sqrt(machine
// epsilon) in the argument. sinh^2 of the axis distance of the Klein point
// e + t f is the ratio N/D of two quadratics in t, so the exact stationary
// point is a root of N'D - ND'; take the root inside the final bracket.
double polish_neck_parameter(const Geodesic3& g, double t0) {
  const Vec3 e = g.e1().u();
  const Vec3 f = g.e2().u() - e;
  const double a = f.x * f.x + f.y * f.y;
  const double b = 2.0 * (e.x * f.x + e.y * f.y);
  const double c = e.x * e.x + e.y * e.y;
  const double alpha = -norm2(f);
  const double beta = -2.0 * dot(e, f);
  const double gamma = 1.0 - norm2(e);
  const double q2 = a * beta - b * alpha;
  const double q1 = 2.0 * (a * gamma - c * alpha);
  const double q0 = b * gamma - c * beta;
  std::vector<double> roots;
  if (std::abs(q2) > 1e-300) {
    const double disc = q1 * q1 - 4.0 * q2 * q0;
    if (disc >= 0.0) {
      const double q = -0.5 * (q1 + std::copysign(std::sqrt(disc), q1));
      roots.push_back(q / q2);
      if (q != 0.0) roots.push_back(q0 / q);
    }
  } else if (q1 != 0.0) {
    roots.push_back(-q0 / q1);
  }
  double best = t0;
  double gap = kNeckPolishWindow;
  for (const double r : roots) {
    if (std::abs(r - t0) <= gap && r > 0.0 && r < 1.0) {
      best = r;
      gap = std::abs(r - t0);
    }
  }
  return best;
}

}  // namespace

BallPoint generator_point(const Geodesic3& g, double t) {
  check_parameter(t, "generator_point");
  const Vec3 k = g.e1().u() * (1.0 - t) + g.e2().u() * t;
  return klein_ball_to_poincare(k);
}

double distance_to_axis(const Geodesic3& g, double t) {
  check_parameter(t, "distance_to_axis");
  return distance_to_z_axis(generator_point(g, t));
}

Geodesic3 rotate_about_z(const Geodesic3& g, double theta) {
  const auto turn = [theta](const IdealEndpoint& e) {
    return IdealEndpoint::from_direction(rotate_about_z(BallPoint::from(e.u()), theta).vec());
  };
  return Geodesic3::make(turn(g.e1()), turn(g.e2()));
}

double golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                               double tolerance) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tolerance) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

CylinderSurface CylinderSurface::make(const Geodesic3& generator) {
  for (const auto* e : {&generator.e1(), &generator.e2()}) {
    if (norm(e->u() - kNorthPole) <= kPointTolerance || norm(e->u() - kSouthPole) <= kPointTolerance) {
      throw DomainError("generator shares an ideal endpoint with the axis (no common perpendicular)");
    }
  }
  CylinderSurface c(Geodesic3::z_axis(), generator);
  if (neck(c).hyperbolic_radius <= kPointTolerance) {
    throw DomainError("generator meets the axis");
  }
  return c;
}

CylinderSurface CylinderSurface::normalize(const Geodesic3& axis, const Geodesic3& generator) {
  // Closest point of the axis to the origin: the foot of the Euclidean
  // perpendicular onto its Klein chord.
  const Vec3 a1 = axis.e1().u();
  const Vec3 a2 = axis.e2().u();
  const Vec3 d = a2 - a1;
  const Vec3 m = a1 + d * (-dot(a1, d) / norm2(d));

  const Vec3 top = boost_ideal(m, a2);
  const Rotation rot = Rotation::between(top / norm(top), kNorthPole);
  const auto move = [&](const IdealEndpoint& e) {
    return IdealEndpoint::from_direction(rot.apply(boost_ideal(m, e.u())));
  };
  return make(Geodesic3::make(move(generator.e1()), move(generator.e2())));
}

NeckCircle neck(const CylinderSurface& c) {
  const Geodesic3& g = c.generator();
  const double t = polish_neck_parameter(
      g, golden_section_minimize([&g](double s) { return distance_to_axis(g, s); }, 0.0, 1.0,
                                 kNeckTolerance));
  NeckCircle out;
  out.parameter = t;
  out.foot = generator_point(g, t);
  out.height = out.foot.z;
  out.hyperbolic_radius = distance_to_z_axis(out.foot);
  out.circumference = 2.0 * std::numbers::pi * std::sinh(out.hyperbolic_radius);
  return out;
}

BallPoint surface_point(const CylinderSurface& c, double t, double theta) {
  return rotate_about_z(generator_point(c.generator(), t), theta);
}

std::vector<ProfileSample> neck_profile(const Geodesic3& g, int samples) {
  if (samples < 1) throw DomainError("neck_profile: samples must be >= 1");
  std::vector<ProfileSample> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i + 1) / (samples + 1);
    out.push_back({t, distance_to_axis(g, t)});
  }
  return out;
}

SampledSurface sample_surface(const CylinderSurface& c, int t_samples, int theta_samples,
                              double t_margin) {
  if (t_samples < 2 || theta_samples < 3) {
    throw DomainError("sample_surface: need at least 2 t samples and 3 theta samples");
  }
  if (!(t_margin > 0.0 && t_margin < 0.5)) {
    throw DomainError("sample_surface: t_margin must lie in (0, 0.5)");
  }
  const auto at = [theta_samples](int i, int j) {
    return static_cast<std::uint32_t>(i * theta_samples + (j % theta_samples));
  };
  std::vector<VertexRecord> records;
  std::vector<Vec3> positions;
  for (int i = 0; i < t_samples; ++i) {
    const double t = t_margin + (1.0 - 2.0 * t_margin) * i / (t_samples - 1);
    for (int j = 0; j < theta_samples; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / theta_samples;
      records.push_back({at(i, j), i, false, static_cast<double>(j) / theta_samples, 0});
      positions.push_back(surface_point(c, t, theta).vec());
    }
  }
  std::vector<Triangle> faces;
  std::vector<int> layers;
  for (int i = 0; i + 1 < t_samples; ++i) {
    for (int j = 0; j < theta_samples; ++j) {
      faces.push_back({at(i, j), at(i, j + 1), at(i + 1, j + 1)});
      faces.push_back({at(i, j), at(i + 1, j + 1), at(i + 1, j)});
      layers.push_back(i);
      layers.push_back(i);
    }
  }
  return {TriMesh(std::move(records), std::move(faces), std::move(layers)), std::move(positions)};
}

TriMesh build_cylinder_mesh(int rows_per_side, int neck_count, std::size_t triangle_budget) {
  if (neck_count < 3) throw DomainError("build_cylinder_mesh: neck_count must be >= 3");
  if (rows_per_side < 0) throw DomainError("build_cylinder_mesh: rows_per_side must be >= 0");

  std::vector<VertexRecord> records;
  std::vector<Triangle> faces;
  std::vector<int> face_layers;
  std::vector<int> count;
  std::vector<std::uint32_t> neck_ring;
  for (int j = 0; j < neck_count; ++j) {
    const auto id = static_cast<std::uint32_t>(j);
    neck_ring.push_back(id);
    records.push_back({id, 0, false, static_cast<double>(j) / neck_count, 0});
  }
  count.assign(records.size(), 0);
  std::uint32_t next_id = static_cast<std::uint32_t>(neck_count);

  for (const int side : {+1, -1}) {
    std::vector<std::uint32_t> ring = neck_ring;
    // The filled side lies to the right of the ring direction, so the second
    // side walks the neck backwards.
    if (side < 0) std::reverse(ring.begin(), ring.end());
    for (int row = 0; row < rows_per_side; ++row) {
      std::vector<int> outward(ring.size());
      for (std::size_t j = 0; j < ring.size(); ++j) {
        outward[j] = row == 0 ? kTrianglesPerSideAtNeck : kCylinderDegree - count[ring[j]];
      }
      const auto before = faces.size();
      ring = detail::grow_ring(ring, outward, next_id, faces);
      if (faces.size() > triangle_budget) {
        throw ResourceError("build_cylinder_mesh: triangle budget of " +
                            std::to_string(triangle_budget) + " exceeded");
      }
      face_layers.resize(faces.size(), row);
      count.resize(next_id, 0);
      records.resize(next_id);
      for (std::size_t j = 0; j < ring.size(); ++j) {
        double slot = static_cast<double>(j) / static_cast<double>(ring.size());
        if (side < 0 && slot > 0.0) slot = 1.0 - slot;
        records[ring[j]] = {ring[j], row + 1, false, slot, side};
      }
      for (auto f = before; f < faces.size(); ++f) {
        for (const auto v : faces[f]) ++count[v];
      }
    }
  }
  return TriMesh(std::move(records), std::move(faces), std::move(face_layers));
}

}  // namespace hyperflower
