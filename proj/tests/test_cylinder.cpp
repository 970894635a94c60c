#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hyperflower/cylinder.hpp"
#include "hyperflower/error.hpp"

using namespace hyperflower;

namespace {

Geodesic3 geodesic(Vec3 a, Vec3 b) {
  return Geodesic3::make(IdealEndpoint::from_direction(a), IdealEndpoint::from_direction(b));
}

Geodesic3 default_generator() { return geodesic({0.8, 0.0, 0.6}, {0.8, 0.0, -0.6}); }

Geodesic3 generic_generator() { return geodesic({0.7, 0.2, 0.5}, {0.3, 0.9, -0.6}); }

// Plain ternary search, independent of the library's golden-section routine.
template <class F>
double ternary_min(F f, double lo, double hi, int iterations = 200) {
  for (int i = 0; i < iterations; ++i) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) < f(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return 0.5 * (lo + hi);
}

Vec3 reflect_z(Vec3 v) { return {v.x, v.y, -v.z}; }

}  // namespace

TEST(DistanceToAxis, ParameterDomain) {
  const auto g = default_generator();
  EXPECT_THROW(distance_to_axis(g, 0.0), DomainError);
  EXPECT_THROW(distance_to_axis(g, 1.0), DomainError);
  EXPECT_THROW(distance_to_axis(g, -0.5), DomainError);
  EXPECT_NO_THROW(distance_to_axis(g, 0.5));
}

TEST(DistanceToAxis, ZeroWhereTheGeneratorCrossesTheAxis) {
  const auto through_origin = geodesic({1, 0, 0}, {-1, 0, 0});
  EXPECT_NEAR(distance_to_axis(through_origin, 0.5), 0.0, 1e-15);
  EXPECT_THROW(CylinderSurface::make(through_origin), DomainError);
}

TEST(CylinderSurface, RejectsGeneratorsAsymptoticToTheAxis) {
  EXPECT_THROW(CylinderSurface::make(geodesic({0, 0, 1}, {1, 0, 0})), DomainError);
  EXPECT_THROW(CylinderSurface::make(geodesic({0.6, 0, -0.8}, {0, 0, -1})), DomainError);
}

TEST(Neck, SymmetricGenerator) {
  for (const double phi : {0.2, 0.6435, 1.0, 1.4}) {
    const auto c = CylinderSurface::make(geodesic({std::cos(phi), 0, std::sin(phi)}, {std::cos(phi), 0, -std::sin(phi)}));
    const auto n = neck(c);
    EXPECT_NEAR(n.parameter, 0.5, 1e-9);
    EXPECT_NEAR(n.height, 0.0, 1e-9);
    EXPECT_NEAR(n.hyperbolic_radius, std::atanh(std::cos(phi)), 1e-12);
    EXPECT_NEAR(n.circumference, 2.0 * std::numbers::pi * std::sinh(n.hyperbolic_radius), 1e-12);
  }
}

TEST(Neck, GenericGeneratorAgreesWithDenseGrid) {
  const auto g = generic_generator();
  const auto n = neck(CylinderSurface::make(g));
  const int grid = 10000;
  double best = std::numeric_limits<double>::infinity();
  int best_i = 0;
  for (int i = 1; i < grid; ++i) {
    const double d = distance_to_axis(g, static_cast<double>(i) / grid);
    if (d < best) {
      best = d;
      best_i = i;
    }
  }
  EXPECT_LE(n.hyperbolic_radius, best + 1e-12);
  EXPECT_NEAR(n.hyperbolic_radius, best, 1e-6);
  const double refined = ternary_min([&g](double t) { return distance_to_axis(g, t); },
                                     static_cast<double>(best_i - 1) / grid, static_cast<double>(best_i + 1) / grid);
  EXPECT_NEAR(n.parameter, refined, 1e-6);
}

TEST(Neck, DistanceGrowsLikeCoshOfArclength) {
  // For a generator coplanar with the axis, points at arclength s from the
  // common perpendicular satisfy sinh d = sinh d0 * cosh s.
  const auto g = geodesic({0.8, 0.0, 0.6}, {0.28, 0.0, -0.96});
  const auto n = neck(CylinderSurface::make(g));
  for (int i = 1; i < 40; ++i) {
    const double t = i / 40.0;
    const double s = ball_distance(generator_point(g, t), n.foot);
    EXPECT_NEAR(std::sinh(distance_to_axis(g, t)), std::sinh(n.hyperbolic_radius) * std::cosh(s),
                1e-8 * std::cosh(s));
  }
}

TEST(Neck, ProfileIsConvexInArclength) {
  const auto g = generic_generator();
  const auto n = neck(CylinderSurface::make(g));
  std::vector<std::pair<double, double>> pts;
  for (int i = 1; i < 200; ++i) {
    const double t = i / 200.0;
    const double s = ball_distance(generator_point(g, t), n.foot) * (t < n.parameter ? -1.0 : 1.0);
    pts.emplace_back(s, distance_to_axis(g, t));
  }
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const auto [s0, d0] = pts[i - 1];
    const auto [s1, d1] = pts[i];
    const auto [s2, d2] = pts[i + 1];
    const double chord = d0 + (d2 - d0) * (s1 - s0) / (s2 - s0);
    EXPECT_LE(d1, chord + 1e-9);
  }
}

TEST(Neck, RotationInvariance) {
  const auto g = generic_generator();
  const double r0 = neck(CylinderSurface::make(g)).hyperbolic_radius;
  for (int i = 0; i < 16; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / 16.0;
    const auto rotated = rotate_about_z(g, theta);
    EXPECT_NEAR(neck(CylinderSurface::make(rotated)).hyperbolic_radius, r0, 1e-12);
    for (const double t : {0.1, 0.37, 0.8}) {
      EXPECT_NEAR(distance_to_axis(rotated, t), distance_to_axis(g, t), 1e-12);
    }
  }
}

TEST(Neck, MirrorSymmetry) {
  const auto g = generic_generator();
  const auto mirrored = Geodesic3::make(IdealEndpoint::from_direction(reflect_z(g.e1().u())),
                                        IdealEndpoint::from_direction(reflect_z(g.e2().u())));
  const auto a = neck(CylinderSurface::make(g));
  const auto b = neck(CylinderSurface::make(mirrored));
  EXPECT_NEAR(a.hyperbolic_radius, b.hyperbolic_radius, 1e-12);
  EXPECT_NEAR(a.height, -b.height, 1e-9);
}

TEST(Neck, ProfileSamples) {
  const auto g = default_generator();
  const auto profile = neck_profile(g, 9);
  ASSERT_EQ(profile.size(), 9u);
  EXPECT_DOUBLE_EQ(profile[4].t, 0.5);
  for (const auto& p : profile) EXPECT_EQ(p.distance, distance_to_axis(g, p.t));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(profile[i].distance, profile[8 - i].distance, 1e-12);
  EXPECT_THROW(neck_profile(g, 0), DomainError);
}

TEST(Normalize, MovesAnArbitraryAxisWithoutChangingTheGap) {
  const auto axis = geodesic({0.9, -0.3, 0.1}, {-0.2, 0.8, 0.5});
  const auto gen = geodesic({0.1, 0.2, 0.95}, {-0.7, -0.6, -0.2});
  const auto c = CylinderSurface::normalize(axis, gen);
  EXPECT_NEAR(c.axis().e2().u().z, 1.0, 1e-15);
  // Nested search for the closest pair of points on the original geodesics.
  const auto gap_at = [&](double t) {
    const BallPoint p = generator_point(gen, t);
    return ball_distance(p, generator_point(axis, ternary_min([&](double s) {
                                               return ball_distance(p, generator_point(axis, s));
                                             }, 1e-9, 1.0 - 1e-9)));
  };
  const double gap = gap_at(ternary_min(gap_at, 1e-9, 1.0 - 1e-9));
  EXPECT_NEAR(neck(c).hyperbolic_radius, gap, 1e-6);
}

TEST(Normalize, IdentityForTheZAxis) {
  const auto g = generic_generator();
  const auto a = CylinderSurface::normalize(Geodesic3::z_axis(), g);
  const auto b = CylinderSurface::make(g);
  EXPECT_NEAR(neck(a).hyperbolic_radius, neck(b).hyperbolic_radius, 1e-12);
  EXPECT_LT(norm(a.generator().e1().u() - b.generator().e1().u()), 1e-12);
}

TEST(SurfacePoint, RotationalSymmetry) {
  const auto c = CylinderSurface::make(generic_generator());
  for (const double t : {0.2, 0.5, 0.9}) {
    const double d = distance_to_z_axis(surface_point(c, t, 0.0));
    for (int i = 1; i < 12; ++i) {
      const double theta = 2.0 * std::numbers::pi * i / 12.0;
      EXPECT_NEAR(distance_to_z_axis(surface_point(c, t, theta)), d, 1e-12);
      const auto p = surface_point(c, t, theta);
      const auto q = surface_point(c, t, theta + 2.0 * std::numbers::pi);
      EXPECT_LT(norm(p.vec() - q.vec()), 1e-14);
    }
  }
}

TEST(SampleSurface, Annulus) {
  const auto s = sample_surface(CylinderSurface::make(default_generator()), 10, 24);
  EXPECT_EQ(s.positions.size(), 240u);
  EXPECT_EQ(s.mesh.face_count(), 2u * 9u * 24u);
  EXPECT_EQ(euler_characteristic(s.mesh), 0);
  for (const auto& p : s.positions) EXPECT_LT(norm(p), 1.0);
  EXPECT_THROW(sample_surface(CylinderSurface::make(default_generator()), 1, 24), DomainError);
}

TEST(CylinderMesh, DegreeEightAnnulus) {
  for (const auto& [rows, neck_count] : std::vector<std::pair<int, int>>{{1, 8}, {2, 8}, {3, 5}, {4, 12}}) {
    const auto m = build_cylinder_mesh(rows, neck_count);
    EXPECT_EQ(euler_characteristic(m), 0);
    EXPECT_TRUE(m.is_annulus());
    for (const auto& v : m.vertices()) {
      if (!v.boundary) {
        EXPECT_EQ(m.degree(v.id), 8);
        EXPECT_EQ(angle_defect_units(m, v.id), -2);
      }
    }
    for (std::uint32_t j = 0; j < static_cast<std::uint32_t>(neck_count); ++j) EXPECT_EQ(m.degree(j), 8);
  }
  const auto bare = build_cylinder_mesh(0, 8);
  EXPECT_EQ(bare.vertex_count(), 8u);
  EXPECT_EQ(bare.face_count(), 0u);
  EXPECT_THROW(build_cylinder_mesh(2, 2), DomainError);
  EXPECT_THROW(build_cylinder_mesh(6, 8, 50), ResourceError);
}

TEST(GoldenSection, FindsMinimum) {
  EXPECT_NEAR(golden_section_minimize([](double x) { return (x - 0.3) * (x - 0.3); }, 0.0, 1.0, 1e-10), 0.3, 1e-9);
}
