#pragma once

// Figures, placements, and the squared-distance primitives every other module
// builds on. Vertex indices are 1-based throughout (A_1 .. A_n).

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclic/error.hpp"
#include "cyclic/scalar.hpp"

namespace cyclic {

// ---------------------------------------------------------------------------
// Plane

/// Regular n-gon with circumradius R, centroid at the origin, A_1 on the +x axis.
template <Scalar F>
struct PolygonSpec {
  int n;
  F R;

  PolygonSpec(int vertices, F circumradius) : n(vertices), R(std::move(circumradius)) {
    if (n < 3) throw DomainError(ErrorCode::InvalidSpec, "polygon needs n >= 3, got " + std::to_string(n));
    if (!(R > F(0))) throw DomainError(ErrorCode::InvalidSpec, "circumradius must be positive");
  }
};

/// Polar placement of M: distance L from the centroid and angle alpha (radians)
/// measured from the direction of A_1.
template <Scalar F>
struct PlanePlacement {
  F L;
  double alpha = 0.0;

  PlanePlacement(F distance, double angle) : L(std::move(distance)), alpha(angle) {
    if (L < F(0)) throw DomainError(ErrorCode::InvalidSpec, "placement distance L must be >= 0");
  }
};

/// A = R^2 + L^2, B = 2RL; every squared vertex distance is A - B cos(theta).
template <Scalar F>
struct SumBasis {
  F A;
  F B;

  SumBasis(const F& R, const F& L) : A(R * R + L * L), B(F(2) * R * L) {}

  F distance_squared(const F& cos_theta) const { return A - B * cos_theta; }
};

/// Polar angle of vertex A_i, (i-1) * 2pi/n.
inline double polygon_vertex_angle(int n, int i) {
  return static_cast<double>(i - 1) * 2.0 * std::numbers::pi / static_cast<double>(n);
}

inline void check_vertex_index(int n, int i) {
  if (i < 1 || i > n) {
    throw DomainError(ErrorCode::IndexOutOfRange,
                      "vertex index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

/// d_i^2 = A - B cos(alpha - (i-1) 2pi/n), float backend.
template <std::floating_point F>
F polygon_distance_squared(const PolygonSpec<F>& spec, const PlanePlacement<F>& p, int i) {
  check_vertex_index(spec.n, i);
  const SumBasis<F> basis(spec.R, p.L);
  const F value = basis.distance_squared(static_cast<F>(std::cos(p.alpha - polygon_vertex_angle(spec.n, i))));
  return value < F(0) ? F(0) : value;
}

/// cos(2pi t) when it is rational (t mod 1 in {0, 1/6, 1/4, 1/3, 1/2, 2/3, 3/4, 5/6}).
std::optional<Rational> rational_cosine_of_turns(const Rational& turns);

/// Exact-backend d_i^2 with the placement angle given in turns (fractions of 2pi).
/// Raises NotRepresentable when the vertex angle has an irrational cosine.
template <Scalar F>
F polygon_distance_squared_exact(const PolygonSpec<F>& spec, const F& L, const Rational& alpha_turns, int i) {
  check_vertex_index(spec.n, i);
  const Rational turns = alpha_turns - Rational(i - 1, spec.n);
  auto c = rational_cosine_of_turns(turns);
  if (!c) {
    throw DomainError(ErrorCode::NotRepresentable,
                      "cos(2pi*" + turns.str() + ") is irrational; use the float backend");
  }
  return SumBasis<F>(spec.R, L).distance_squared(F(*c));
}

struct Point2 {
  double x;
  double y;
};

inline Point2 polygon_vertex(int n, double R, int i) {
  check_vertex_index(n, i);
  const double t = polygon_vertex_angle(n, i);
  return {R * std::cos(t), R * std::sin(t)};
}

inline Point2 plane_point(double L, double alpha) { return {L * std::cos(alpha), L * std::sin(alpha)}; }

// ---------------------------------------------------------------------------
// Distance multisets

/// Squared distances d_1^2 .. d_n^2 from one point to the vertices of a figure.
template <Scalar F>
struct DistanceMultiset {
  std::vector<F> sq;

  DistanceMultiset() = default;
  explicit DistanceMultiset(std::vector<F> values) : sq(std::move(values)) {
    for (const F& v : sq) {
      if (v < F(0)) throw DomainError(ErrorCode::InvalidSpec, "squared distance must be >= 0");
    }
  }

  int size() const { return static_cast<int>(sq.size()); }
  /// 1-based access to d_i^2.
  const F& operator()(int i) const {
    check_vertex_index(size(), i);
    return sq[static_cast<std::size_t>(i - 1)];
  }
};

template <Scalar F>
F sum_of_powers(const DistanceMultiset<F>& d, unsigned m) {
  F total(0);
  for (const F& v : d.sq) total = total + pow_int(v, m);
  return total;
}

template <std::floating_point F>
DistanceMultiset<F> polygon_distances(const PolygonSpec<F>& spec, const PlanePlacement<F>& p) {
  std::vector<F> out;
  out.reserve(static_cast<std::size_t>(spec.n));
  for (int i = 1; i <= spec.n; ++i) out.push_back(polygon_distance_squared(spec, p, i));
  return DistanceMultiset<F>(std::move(out));
}

/// 16 * area^2 of the triangle with squared sides a2, b2, c2:
///   2a2b2 + 2a2c2 + 2b2c2 - a2^2 - b2^2 - c2^2.
/// Negative means no such triangle exists; zero means degenerate.
template <Scalar F>
F heron_area_16sq(const F& a2, const F& b2, const F& c2) {
  return F(2) * (a2 * b2 + a2 * c2 + b2 * c2) - a2 * a2 - b2 * b2 - c2 * c2;
}

// ---------------------------------------------------------------------------
// Space

enum class SolidKind { Tetrahedron, Octahedron, Cube, Icosahedron, Dodecahedron };

inline constexpr std::array<SolidKind, 5> kAllSolids = {
    SolidKind::Tetrahedron, SolidKind::Octahedron, SolidKind::Cube, SolidKind::Icosahedron,
    SolidKind::Dodecahedron};

int vertex_count(SolidKind kind);
/// Largest m for which the 2m-th power sum depends on R and L only.
int max_power_index(SolidKind kind);
std::string_view solid_name(SolidKind kind);
std::optional<SolidKind> parse_solid_kind(std::string_view name);

template <Scalar F>
struct Vec3 {
  F x;
  F y;
  F z;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
  F norm_sq() const { return x * x + y * y + z * z; }
};

/// Cartesian point with the centroid at the origin.
template <Scalar F>
struct SpacePlacement {
  F x;
  F y;
  F z;

  F L_sq() const { return x * x + y * y + z * z; }
  Vec3<F> vec() const { return {x, y, z}; }
};

/// R^2 / c^2 for the coordinate lists used here.
template <Scalar F>
F circumradius_sq_factor(SolidKind kind) {
  switch (kind) {
    case SolidKind::Octahedron: return F(1);
    case SolidKind::Icosahedron: {
      const F phi = golden_ratio<F>();
      return F(1) + phi * phi;
    }
    case SolidKind::Tetrahedron:
    case SolidKind::Cube:
    case SolidKind::Dodecahedron: return F(3);
  }
  return F(3);
}

/// Platonic solid centred at the origin. The coordinate scale c is only known
/// when it is representable in the backend (always for floats).
template <Scalar F>
struct SolidSpec {
  SolidKind kind;
  F R_sq;
  std::optional<F> c;

  static SolidSpec from_scale(SolidKind kind, F scale) {
    if (!(scale > F(0))) throw DomainError(ErrorCode::InvalidSpec, "coordinate scale must be positive");
    F r2 = scale * scale * circumradius_sq_factor<F>(kind);
    return SolidSpec(kind, std::move(r2), std::move(scale));
  }

  static SolidSpec from_circumradius(SolidKind kind, const F& R) {
    if (!(R > F(0))) throw DomainError(ErrorCode::InvalidSpec, "circumradius must be positive");
    std::optional<F> scale;
    if constexpr (has_sqrt5_v<F>) {
      scale = try_sqrt(R * R / circumradius_sq_factor<F>(kind));
    } else if (kind != SolidKind::Icosahedron) {
      scale = try_sqrt(R * R / circumradius_sq_factor<F>(kind));
    }
    return SolidSpec(kind, R * R, std::move(scale));
  }

  int n() const { return vertex_count(kind); }

  const F& scale() const {
    if (!c) {
      throw DomainError(ErrorCode::NotRepresentable,
                        "coordinate scale of this solid is irrational here; construct it from a scale or use floats");
    }
    return *c;
  }

 private:
  SolidSpec(SolidKind k, F r2, std::optional<F> scale) : kind(k), R_sq(std::move(r2)), c(std::move(scale)) {}
};

/// Vertices A_1..A_n in the fixed order used throughout: antipodal vertices
/// are consecutive (A_{2j-1}, A_{2j}) for every solid except the tetrahedron,
/// and the dodecahedron's A_1..A_8 are the cube's vertices at the same scale.
template <Scalar F>
std::vector<Vec3<F>> solid_vertices(const SolidSpec<F>& spec) {
  const F c = spec.scale();
  const F z(0);
  switch (spec.kind) {
    case SolidKind::Tetrahedron:
      return {{c, c, c}, {c, -c, -c}, {-c, c, -c}, {-c, -c, c}};
    case SolidKind::Octahedron:
      return {{c, z, z}, {-c, z, z}, {z, c, z}, {z, -c, z}, {z, z, c}, {z, z, -c}};
    case SolidKind::Cube:
      return {{-c, -c, -c}, {c, c, c}, {c, c, -c}, {-c, -c, c},
              {c, -c, c}, {-c, c, -c}, {-c, c, c}, {c, -c, -c}};
    case SolidKind::Icosahedron: {
      const F p = c * golden_ratio<F>();
      return {{z, c, p}, {z, -c, -p}, {z, -c, p}, {z, c, -p},
              {c, p, z}, {-c, -p, z}, {c, -p, z}, {-c, p, z},
              {p, z, c}, {-p, z, -c}, {p, z, -c}, {-p, z, c}};
    }
    case SolidKind::Dodecahedron: {
      const F phi = golden_ratio<F>();
      const F p = c * phi;
      const F q = c / phi;
      return {{-c, -c, -c}, {c, c, c}, {c, c, -c}, {-c, -c, c},
              {c, -c, c}, {-c, c, -c}, {-c, c, c}, {c, -c, -c},
              {z, q, p}, {z, -q, -p}, {z, -q, p}, {z, q, -p},
              {q, p, z}, {-q, -p, z}, {-q, p, z}, {q, -p, z},
              {p, z, q}, {-p, z, -q}, {p, z, -q}, {-p, z, q}};
    }
  }
  return {};
}

template <Scalar F>
F solid_distance_squared(const SolidSpec<F>& spec, const SpacePlacement<F>& p, int i) {
  check_vertex_index(spec.n(), i);
  const auto verts = solid_vertices(spec);
  return (verts[static_cast<std::size_t>(i - 1)] - p.vec()).norm_sq();
}

template <Scalar F>
DistanceMultiset<F> solid_distances(const SolidSpec<F>& spec, const SpacePlacement<F>& p) {
  std::vector<F> out;
  for (const auto& v : solid_vertices(spec)) out.push_back((v - p.vec()).norm_sq());
  return DistanceMultiset<F>(std::move(out));
}

}  // namespace cyclic
