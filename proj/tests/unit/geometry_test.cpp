#include <gtest/gtest.h>

#include "cyclic/geometry.hpp"
#include "support.hpp"

using namespace cyclic;

TEST(PolygonDistance, SquareAtDistanceTwo) {
  const PolygonSpec<double> spec(4, 1.0);
  const PlanePlacement<double> p(2.0, 0.0);
  EXPECT_NEAR(polygon_distance_squared(spec, p, 1), 1.0, 1e-12);
  EXPECT_NEAR(polygon_distance_squared(spec, p, 2), 5.0, 1e-12);
  EXPECT_NEAR(polygon_distance_squared(spec, p, 3), 9.0, 1e-12);
  EXPECT_THROW(polygon_distance_squared(spec, p, 5), DomainError);
  EXPECT_THROW(polygon_distance_squared(spec, p, 0), DomainError);
}

TEST(PolygonDistance, ExactAtRationalCosines) {
  const PolygonSpec<Rational> spec(4, Rational(1));
  EXPECT_EQ(polygon_distance_squared_exact(spec, Rational(2), Rational(0), 2), Rational(5));
  EXPECT_EQ(polygon_distance_squared_exact(spec, Rational(2), Rational(0), 3), Rational(9));
  EXPECT_THROW(polygon_distance_squared_exact(PolygonSpec<Rational>(8, Rational(1)), Rational(1), Rational(0), 2),
               DomainError);
}

TEST(PolygonSpec, RejectsBadInput) {
  EXPECT_THROW(PolygonSpec<double>(2, 1.0), DomainError);
  EXPECT_THROW(PolygonSpec<double>(5, 0.0), DomainError);
  EXPECT_THROW(PlanePlacement<double>(-1.0, 0.0), DomainError);
}

TEST(Heron, SpecialTriangles) {
  EXPECT_EQ(heron_area_16sq(Rational(1), Rational(1), Rational(1)), Rational(3));
  EXPECT_EQ(heron_area_16sq(Rational(1), Rational(4), Rational(9)), Rational(0));
  EXPECT_EQ(heron_area_16sq(Rational(1), Rational(1), Rational(9)), Rational(-45));
}

TEST(Solids, TetrahedronAndOctahedronCoordinates) {
  const auto t = solid_vertices(SolidSpec<Rational>::from_scale(SolidKind::Tetrahedron, Rational(1)));
  const std::vector<Vec3<Rational>> expect_t = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  EXPECT_EQ(t, expect_t);
  const auto o = solid_vertices(SolidSpec<Rational>::from_scale(SolidKind::Octahedron, Rational(1)));
  ASSERT_EQ(o.size(), 6u);
  for (const auto& v : o) EXPECT_EQ(v.norm_sq(), Rational(1));
}

TEST(Solids, CentredAndOnTheSphere) {
  for (SolidKind kind : kAllSolids) {
    const auto spec = SolidSpec<QSqrt5>::from_scale(kind, QSqrt5(Rational(3, 2)));
    const auto vs = solid_vertices(spec);
    ASSERT_EQ(static_cast<int>(vs.size()), vertex_count(kind));
    Vec3<QSqrt5> total{0, 0, 0};
    for (const auto& v : vs) {
      total = total + v;
      EXPECT_EQ(v.norm_sq(), spec.R_sq) << solid_name(kind);
    }
    EXPECT_EQ(total, (Vec3<QSqrt5>{0, 0, 0})) << solid_name(kind);
  }
}

TEST(Solids, AntipodalVerticesAreConsecutive) {
  for (SolidKind kind : kAllSolids) {
    if (kind == SolidKind::Tetrahedron) continue;
    const auto vs = solid_vertices(SolidSpec<QSqrt5>::from_scale(kind, QSqrt5(1)));
    for (std::size_t i = 0; i + 1 < vs.size(); i += 2) {
      EXPECT_EQ(vs[i] + vs[i + 1], (Vec3<QSqrt5>{0, 0, 0})) << solid_name(kind) << " pair " << i;
    }
  }
}

TEST(Solids, DistanceExamples) {
  const auto oct = SolidSpec<Rational>::from_scale(SolidKind::Octahedron, Rational(1));
  EXPECT_EQ(solid_distance_squared(oct, SpacePlacement<Rational>{0, 0, 1}, 5), Rational(0));
  EXPECT_EQ(solid_distance_squared(oct, SpacePlacement<Rational>{0, 0, 1}, 6), Rational(4));
  const auto tet = SolidSpec<Rational>::from_scale(SolidKind::Tetrahedron, Rational(1));
  EXPECT_EQ(solid_distance_squared(tet, SpacePlacement<Rational>{1, 0, 0}, 1), Rational(2));
  const auto cube = SolidSpec<Rational>::from_scale(SolidKind::Cube, Rational(1));
  for (int i = 1; i <= 8; ++i) EXPECT_EQ(solid_distance_squared(cube, SpacePlacement<Rational>{0, 0, 0}, i), Rational(3));
}

TEST(Solids, ParseNames) {
  EXPECT_EQ(parse_solid_kind("dodecahedron"), SolidKind::Dodecahedron);
  EXPECT_FALSE(parse_solid_kind("sphere").has_value());
  EXPECT_EQ(max_power_index(SolidKind::Tetrahedron), 2);
  EXPECT_EQ(max_power_index(SolidKind::Cube), 3);
  EXPECT_EQ(max_power_index(SolidKind::Icosahedron), 5);
}

TEST(Solids, IcosahedronCircumradiusIsNotRational) {
  const auto spec = SolidSpec<Rational>::from_circumradius(SolidKind::Icosahedron, Rational(1));
  EXPECT_THROW(solid_vertices(spec), DomainError);
  EXPECT_EQ(spec.R_sq, Rational(1));
}
