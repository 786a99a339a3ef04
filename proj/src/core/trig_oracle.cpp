#include "cyclic/trig_oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cyclic/error.hpp"

namespace cyclic {

TrigSumSpec::TrigSumSpec(int vertices, int power, double angle) : n(vertices), m(power), alpha(angle) {
  if (n < 1 || m < 1) {
    throw DomainError(ErrorCode::InvalidSpec,
                      "trig sums need n >= 1 and m >= 1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
}

double multiple_angle_cosine_sum(const TrigSumSpec& s) {
  const double step = 2.0 * std::numbers::pi / s.n;
  double total = 0.0;
  for (int k = 1; k <= s.n; ++k) total += std::cos(s.m * (s.alpha - (k - 1) * step));
  return total;
}

double cosine_power_sum(const TrigSumSpec& s) {
  const double step = 2.0 * std::numbers::pi / s.n;
  double total = 0.0;
  for (int k = 1; k <= s.n; ++k) total += std::pow(std::cos(s.alpha - (k - 1) * step), s.m);
  return total;
}

Rational cosine_power_sum_closed(int n, int m) {
  if (m % 2 == 1) return Rational(0);
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(m));
  return Rational(mpq_class(mpz_class(n) * binomial(static_cast<unsigned>(m), static_cast<unsigned>(m / 2)), two_pow));
}

std::vector<HarmonicTerm> power_reduction_coefficients(int m) {
  if (m < 1) throw DomainError(ErrorCode::InvalidSpec, "power reduction needs m >= 1");
  // cos^m = 2^-m (e^{i t} + e^{-i t})^m = 2^-m sum_k C(m,k) cos((m-2k) t);
  // terms k and m-k pair up into 2 C(m,k) / 2^m.
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(m));
  std::vector<HarmonicTerm> out;
  for (int k = 0; 2 * k < m; ++k) {
    mpz_class num = 2 * binomial(static_cast<unsigned>(m), static_cast<unsigned>(k));
    out.push_back({m - 2 * k, Rational(mpq_class(num, two_pow))});
  }
  if (m % 2 == 0) {
    out.push_back({0, Rational(mpq_class(binomial(static_cast<unsigned>(m), static_cast<unsigned>(m / 2)), two_pow))});
  }
  return out;
}

}  // namespace cyclic
