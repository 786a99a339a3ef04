#include "cyclic/geometry.hpp"

#include <algorithm>
#include <cctype>

namespace cyclic {

std::optional<Rational> rational_cosine_of_turns(const Rational& turns) {
  // Reduce to [0, 1).
  const mpz_class num = turns.numerator();
  const mpz_class den = turns.denominator();
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const Rational t(mpq_class(r, den));

  // Niven: the only rational values of cos at rational multiples of pi.
  if (t == 0) return Rational(1);
  if (t == Rational(1, 2)) return Rational(-1);
  if (t == Rational(1, 4) || t == Rational(3, 4)) return Rational(0);
  if (t == Rational(1, 6) || t == Rational(5, 6)) return Rational(1, 2);
  if (t == Rational(1, 3) || t == Rational(2, 3)) return Rational(-1, 2);
  return std::nullopt;
}

int vertex_count(SolidKind kind) {
  switch (kind) {
    case SolidKind::Tetrahedron: return 4;
    case SolidKind::Octahedron: return 6;
    case SolidKind::Cube: return 8;
    case SolidKind::Icosahedron: return 12;
    case SolidKind::Dodecahedron: return 20;
  }
  return 0;
}

int max_power_index(SolidKind kind) {
  switch (kind) {
    case SolidKind::Tetrahedron: return 2;
    case SolidKind::Octahedron:
    case SolidKind::Cube: return 3;
    case SolidKind::Icosahedron:
    case SolidKind::Dodecahedron: return 5;
  }
  return 0;
}

std::string_view solid_name(SolidKind kind) {
  switch (kind) {
    case SolidKind::Tetrahedron: return "tetrahedron";
    case SolidKind::Octahedron: return "octahedron";
    case SolidKind::Cube: return "cube";
    case SolidKind::Icosahedron: return "icosahedron";
    case SolidKind::Dodecahedron: return "dodecahedron";
  }
  return "unknown";
}

std::optional<SolidKind> parse_solid_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (SolidKind k : kAllSolids) {
    if (lower == solid_name(k)) return k;
  }
  if (lower == "t4") return SolidKind::Tetrahedron;
  if (lower == "t6") return SolidKind::Octahedron;
  if (lower == "t8") return SolidKind::Cube;
  if (lower == "t12") return SolidKind::Icosahedron;
  if (lower == "t20") return SolidKind::Dodecahedron;
  return std::nullopt;
}

}  // namespace cyclic
