#pragma once

// Power sums of distances to the vertices of a regular n-gon: the closed form,
// a vertex-by-vertex oracle, locus classification, and the conversions between
// the averages S2, S4, ... and the pair (R^2, L^2).

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "cyclic/geometry.hpp"

namespace cyclic {

/// Values of a +/- formula.
template <Scalar F>
struct BranchPair {
  F plus;
  F minus;
};

/// A named residual: zero (or within tolerance) when the identity holds.
template <Scalar F>
struct Residual {
  std::string identity;
  F value;
};

/// S^(2m): the average of 2m-th powers of distances, with the figure it came from.
template <Scalar F>
struct CyclicAverage {
  int m;
  F value;
  std::variant<PolygonSpec<F>, SolidSpec<F>> source;
};

inline void check_polygon_power(int n, int m) {
  if (m < 1 || m >= n) {
    throw DomainError(ErrorCode::OutOfRange, "power index m=" + std::to_string(m) + " outside 1.." +
                                                 std::to_string(n - 1) + " for n=" + std::to_string(n) +
                                                 "; the sum depends on alpha there");
  }
}

namespace detail {

/// Floats that should be >= 0 but came out of a subtraction: values above
/// -rel*scale snap to 0, anything below is a genuine negative.
template <Scalar F>
F snap_nonnegative(const F& v, const F& scale, double rel = 1e-12) {
  if constexpr (is_exact_v<F>) {
    return v;
  } else {
    if (v < F(0) && -v <= static_cast<F>(rel) * abs_value(scale)) return F(0);
    return v;
  }
}

/// Largest root of the monotone function f(l2) = target on [0, inf), by bisection
/// on l2 until the bracket is 1e-13 relative.
double solve_monotone_l2(const std::function<double(double)>& f, double target, double start);

}  // namespace detail

/// n * [A^m + sum_k C(m,2k) C(2k,k) P^k A^(m-2k)] with A = R^2 + L^2, P = R^2 L^2.
/// Works on squares only, so it stays exact whenever R^2 and L^2 are.
template <Scalar F>
F polygon_bracket_sq(int m, const F& R_sq, const F& L_sq) {
  const F A = R_sq + L_sq;
  const F P = R_sq * L_sq;
  F total = pow_int(A, static_cast<unsigned>(m));
  for (int k = 1; 2 * k <= m; ++k) {
    const mpz_class coef = binomial(static_cast<unsigned>(m), static_cast<unsigned>(2 * k)) *
                           binomial(static_cast<unsigned>(2 * k), static_cast<unsigned>(k));
    total = total + from_integer<F>(coef) * pow_int(P, static_cast<unsigned>(k)) *
                        pow_int(A, static_cast<unsigned>(m - 2 * k));
  }
  return total;
}

template <Scalar F>
F power_sum_closed(const PolygonSpec<F>& spec, int m, const F& L) {
  check_polygon_power(spec.n, m);
  if (L < F(0)) throw DomainError(ErrorCode::InvalidSpec, "placement distance L must be >= 0");
  return F(spec.n) * polygon_bracket_sq(m, spec.R * spec.R, L * L);
}

/// Sum of d_i^(2m) over the vertices at a concrete placement; any m >= 1.
double power_sum_brute(const PolygonSpec<double>& spec, int m, const PlanePlacement<double>& p);

/// Exact vertex sums sum_i d_i^(2m) for m = 1..m_max at the placement (L, alpha),
/// alpha given in turns. Cosines are taken in the cyclotomic field, so no vertex
/// angle needs a rational cosine; the result at index m-1 is the sum for m.
/// Raises NotRepresentable if a sum is irrational (possible only for m >= n).
std::vector<Rational> power_sums_brute_exact(const PolygonSpec<Rational>& spec, const Rational& L,
                                             const Rational& alpha_turns, int m_max);

template <Scalar F>
CyclicAverage<F> cyclic_average(const PolygonSpec<F>& spec, int m, const F& L) {
  F sum = power_sum_closed(spec, m, L);
  return {m, sum / F(spec.n), spec};
}

// ---------------------------------------------------------------------------
// Locus

enum class LocusKind { Circle, Sphere, Centroid, Empty };

struct LocusClass {
  LocusKind kind;
  double radius = 0.0;  ///< L of the circle or sphere; 0 otherwise
};

std::string describe(const LocusClass& locus);

inline constexpr double kCentroidRelTol = 1e-12;

/// Shared by polygons and solids: classify C against n R^(2m) and, when
/// larger, invert the monotone closed form `sum_of_l2` for L.
template <Scalar F>
LocusClass classify_against_centroid(const F& C, const F& centroid_value, bool sphere,
                                     const std::function<double(double)>& sum_of_l2, double R_sq) {
  bool equal;
  if constexpr (is_exact_v<F>) {
    equal = C == centroid_value;
  } else {
    equal = approx_equal(to_double(C), to_double(centroid_value), kCentroidRelTol);
  }
  if (equal) return {LocusKind::Centroid, 0.0};
  if (C < centroid_value) return {LocusKind::Empty, 0.0};
  const double l2 = detail::solve_monotone_l2(sum_of_l2, to_double(C), R_sq);
  return {sphere ? LocusKind::Sphere : LocusKind::Circle, std::sqrt(l2)};
}

template <Scalar F>
LocusClass locus_classify(const PolygonSpec<F>& spec, int m, const F& C) {
  check_polygon_power(spec.n, m);
  const F R_sq = spec.R * spec.R;
  const F centroid_value = F(spec.n) * pow_int(R_sq, static_cast<unsigned>(m));
  const double r2 = to_double(R_sq);
  const int n = spec.n;
  return classify_against_centroid<F>(
      C, centroid_value, false, [=](double l2) { return n * polygon_bracket_sq<double>(m, r2, l2); }, r2);
}

// ---------------------------------------------------------------------------
// Conversions between averages and (R^2, L^2)

/// {R^2, L^2} as (S2 + sqrt(3 S2^2 - 2 S4)) / 2 and (S2 - sqrt(...)) / 2;
/// which one is R^2 cannot be told from the averages alone.
template <Scalar F>
BranchPair<F> recover_r2_l2(const F& S2, const F& S4) {
  if (!(S2 > F(0))) throw DomainError(ErrorCode::InvalidAverage, "S2 must be positive");
  const F disc = detail::snap_nonnegative(F(3) * S2 * S2 - F(2) * S4, S2 * S2);
  if (disc < F(0)) {
    throw DomainError(ErrorCode::NegativeDiscriminant,
                      "3*S2^2 - 2*S4 = " + format_scalar(disc) + " < 0; the averages are inconsistent");
  }
  const F s = scalar_sqrt(disc);
  return {(S2 + s) / F(2), (S2 - s) / F(2)};
}

/// S^(2m) from S^(2) and R, with L^2 = S2 - R^2.
template <Scalar F>
F s2m_from_s2(int m, const F& S2, const F& R) {
  if (m < 2) throw DomainError(ErrorCode::OutOfRange, "s2m_from_s2 needs m >= 2");
  const F R_sq = R * R;
  const F L_sq = detail::snap_nonnegative(S2 - R_sq, R_sq);
  if (L_sq < F(0)) {
    throw DomainError(ErrorCode::InvalidAverage, "S2 = " + format_scalar(S2) + " is below R^2 = " + format_scalar(R_sq));
  }
  return polygon_bracket_sq(m, R_sq, L_sq);
}

/// S^(2m) from S^(2) and S^(4) alone: R^2 L^2 = (S4 - S2^2) / 2.
template <Scalar F>
F s2m_from_s2_s4(int m, const F& S2, const F& S4) {
  if (m < 3) throw DomainError(ErrorCode::OutOfRange, "s2m_from_s2_s4 needs m >= 3");
  const F diff = detail::snap_nonnegative(S4 - S2 * S2, S2 * S2);
  if (diff < F(0)) {
    throw DomainError(ErrorCode::InvalidAverage, "S4 = " + format_scalar(S4) + " is below S2^2");
  }
  mpz_class two_pow = 1;
  F total = pow_int(S2, static_cast<unsigned>(m));
  for (int k = 1; 2 * k <= m; ++k) {
    two_pow *= 2;
    const mpz_class coef = binomial(static_cast<unsigned>(m), static_cast<unsigned>(2 * k)) *
                           binomial(static_cast<unsigned>(2 * k), static_cast<unsigned>(k));
    total = total + from_integer<F>(coef) / from_integer<F>(two_pow) * pow_int(diff, static_cast<unsigned>(k)) *
                        pow_int(S2, static_cast<unsigned>(m - 2 * k));
  }
  return total;
}

/// 3 (sum d^2)^2 - 2n sum d^4; zero exactly on the circumcircle.
template <Scalar F>
F circumcircle_check(const DistanceMultiset<F>& d) {
  const F s2 = sum_of_powers(d, 1);
  const F s4 = sum_of_powers(d, 2);
  return F(3) * s2 * s2 - F(2 * d.size()) * s4;
}

}  // namespace cyclic
