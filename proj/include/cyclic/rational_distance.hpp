#pragma once

// Rational distances to the vertices of a regular polygon: the side length in
// terms of the averages, the rational quartic satisfied by sin(pi/n), the
// necessary area conditions for n = 4 and 6, and the 24-gon impossibility.

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "cyclic/polygon.hpp"
#include "cyclic/polynomial.hpp"

namespace cyclic {

/// sin^2(pi/n) = (1 - cos(2pi/n)) / 2; exact backends need a rational cosine.
template <Scalar F>
F sin_sq_pi_over(int n) {
  if (n < 1) throw DomainError(ErrorCode::InvalidSpec, "n must be >= 1");
  if constexpr (is_exact_v<F>) {
    const auto c = rational_cosine_of_turns(Rational(1, n));
    if (!c) {
      throw DomainError(ErrorCode::NotRepresentable,
                        "sin^2(pi/" + std::to_string(n) + ") is irrational; use the float backend");
    }
    return F((Rational(1) - *c) / Rational(2));
  } else {
    const double s = std::sin(std::numbers::pi / n);
    return static_cast<F>(s * s);
  }
}

/// a_n^2 = 2 sin^2(pi/n) (S2 +/- sqrt(3 S2^2 - 2 S4)); the genuine side is one
/// of the two, the other belongs to the figure with R and L swapped.
template <Scalar F>
BranchPair<F> side_from_averages(int n, const F& S2, const F& S4) {
  if (n < 3) throw DomainError(ErrorCode::InvalidSpec, "polygon needs n >= 3");
  const F disc = detail::snap_nonnegative(F(3) * S2 * S2 - F(2) * S4, S2 * S2);
  if (disc < F(0)) {
    throw DomainError(ErrorCode::NegativeDiscriminant,
                      "3*S2^2 - 2*S4 = " + format_scalar(disc) + " < 0; the averages are inconsistent");
  }
  const F s = scalar_sqrt(disc);
  const F k = F(2) * sin_sq_pi_over<F>(n);
  return {k * (S2 + s), k * (S2 - s)};
}

/// c4 x^4 + c2 x^2 + c0.
template <Scalar F>
struct QuarticWitness {
  F c4;
  F c2;
  F c0;

  double evaluate(double x) const {
    const double x2 = x * x;
    return to_double(c4) * x2 * x2 + to_double(c2) * x2 + to_double(c0);
  }
};

/// 8(S4 - S2^2) x^4 - 4 S2 x^2 + 1. For a placement relative to the polygon with
/// unit side, sin(pi/n) is a root (R = 1 / (2 sin(pi/n))).
template <Scalar F>
QuarticWitness<F> quartic_witness(const F& S2, const F& S4) {
  const F gap = S4 - S2 * S2;
  bool degenerate;
  if constexpr (is_exact_v<F>) {
    degenerate = gap == F(0);
  } else {
    degenerate = abs_value(gap) <= F(1e-12) * S2 * S2;
  }
  if (degenerate) {
    throw DomainError(ErrorCode::DegenerateQuartic, "S4 = S2^2: the point is the centroid and the quartic vanishes");
  }
  if (gap < F(0)) throw DomainError(ErrorCode::InvalidAverage, "S4 is below S2^2");
  return {F(8) * gap, F(-4) * S2, F(1)};
}

struct AreaCondition {
  std::string window;   ///< the triangle whose area is tested, e.g. "(d1, sqrt2 d2, d3)"
  Rational value;       ///< 16 area^2, times 3 for the hexagon's sqrt(3) factor
  bool rational_area;   ///< value is the square of a rational
};

struct AreaConditionReport {
  int n;
  std::vector<AreaCondition> conditions;
  bool areas_equal;
  bool all_distances_rational;  ///< every d_i^2 is a rational square

  bool holds() const {
    bool ok = areas_equal;
    for (const auto& c : conditions) ok = ok && c.rational_area;
    return ok;
  }
};

/// Whether a rational is the square of a rational (lowest terms, exact).
bool is_rational_square(const Rational& v);

/// Conditions on squared distances for n = 4 and n = 6.
AreaConditionReport necessary_condition_areas(int n, const DistanceMultiset<Rational>& d_sq);
/// Same from distance strings ("3", "5/2", "0.75"); NonRationalInput if any
/// entry is not a rational number.
AreaConditionReport necessary_condition_areas(int n, const std::vector<std::string>& distances);

struct RationalDistanceReport {
  bool conclusive;
  std::string text;                                         ///< human-readable argument
  std::vector<std::pair<std::string, std::string>> block;  ///< degree, certifying_prime, factor_degrees, conclusion
  std::string final_line;

  /// text, the block fenced as ```report ... ```, then the final line
  std::string render() const;
};

/// The full chain for the unit 24-gon, every number recomputed.
RationalDistanceReport rational_distance_report();

}  // namespace cyclic
