#include "cyclic/polygon.hpp"

#include <fmt/format.h>

#include <cmath>
#include <map>
#include <numeric>

#include "cyclic/cyclotomic.hpp"

namespace cyclic {

double power_sum_brute(const PolygonSpec<double>& spec, int m, const PlanePlacement<double>& p) {
  if (m < 1) throw DomainError(ErrorCode::OutOfRange, "power index m must be >= 1");
  double total = 0.0;
  for (int i = 1; i <= spec.n; ++i) total += std::pow(polygon_distance_squared(spec, p, i), m);
  return total;
}

std::vector<Rational> power_sums_brute_exact(const PolygonSpec<Rational>& spec, const Rational& L,
                                             const Rational& alpha_turns, int m_max) {
  if (m_max < 1) throw DomainError(ErrorCode::OutOfRange, "power index m must be >= 1");
  if (L < Rational(0)) throw DomainError(ErrorCode::InvalidSpec, "placement distance L must be >= 0");

  // Every vertex angle is a multiple of 2pi/N.
  const mpz_class den = alpha_turns.denominator();
  if (!den.fits_sint_p()) throw DomainError(ErrorCode::NotRepresentable, "angle denominator too large");
  const long N = std::lcm(static_cast<long>(spec.n), den.get_si());
  if (N > 100000) throw DomainError(ErrorCode::NotRepresentable, "angle denominator too large");
  const CyclotomicField field(static_cast<int>(N));

  // Vertices with exponents j and -j share a cosine; count each class once.
  std::map<long, int> classes;
  for (int i = 1; i <= spec.n; ++i) {
    const Rational t = (alpha_turns - Rational(i - 1, spec.n)) * Rational(N);
    long j = t.numerator().get_si() % N;
    if (j < 0) j += N;
    classes[std::min(j, N - j)] += 1;
  }

  const Rational A = spec.R * spec.R + L * L;
  const Rational RL = spec.R * L;
  std::vector<CyclotomicField::Element> totals(static_cast<std::size_t>(m_max), field.constant(Rational(0)));
  for (const auto& [j, count] : classes) {
    // d^2 = A - 2RL cos = A - RL (zeta^j + zeta^-j)
    const auto cos2 = field.add(field.zeta_power(static_cast<int>(j)), field.zeta_power(static_cast<int>(-j)));
    const auto d2 = field.add(field.constant(A), field.scale(cos2, -RL));
    auto power = d2;
    for (int m = 1; m <= m_max; ++m) {
      if (m > 1) power = field.multiply(power, d2);
      totals[static_cast<std::size_t>(m - 1)] =
          field.add(totals[static_cast<std::size_t>(m - 1)], field.scale(power, Rational(count)));
    }
  }

  std::vector<Rational> out;
  out.reserve(totals.size());
  for (std::size_t k = 0; k < totals.size(); ++k) {
    auto value = field.as_rational(totals[k]);
    if (!value) {
      throw DomainError(ErrorCode::NotRepresentable,
                        fmt::format("the 2m-th power sum for m={} is irrational at this angle", k + 1));
    }
    out.push_back(*value);
  }
  return out;
}

std::string describe(const LocusClass& locus) {
  switch (locus.kind) {
    case LocusKind::Circle: return "circle L=" + format_scalar(locus.radius);
    case LocusKind::Sphere: return "sphere L=" + format_scalar(locus.radius);
    case LocusKind::Centroid: return "centroid";
    case LocusKind::Empty: return "empty";
  }
  return "unknown";
}

namespace detail {

double solve_monotone_l2(const std::function<double(double)>& f, double target, double start) {
  double lo = 0.0;
  double hi = std::max(1.0, start);
  while (f(hi) < target) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw DomainError(ErrorCode::OutOfRange, "locus constant too large to invert");
  }
  for (int iter = 0; iter < 400 && hi - lo > 1e-13 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

}  // namespace cyclic
