#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_n) = Q[x] / Phi_n(x).
//
// Used by the exact brute-force oracle: vertex cosines of a regular n-gon are
// (zeta^k + zeta^-k) / 2, which are irrational for most n, but every vertex
// distance lives in Q(zeta_n) and so does their power sum. The sum must come
// out as a rational number; that is checked, not assumed.

#include <vector>

#include "cyclic/scalar.hpp"

namespace cyclic {

/// Integer coefficients of Phi_n, ascending degree.
std::vector<mpz_class> cyclotomic_polynomial(int n);

class CyclotomicField {
 public:
  using Element = std::vector<Rational>;  // ascending powers of zeta, size degree()

  explicit CyclotomicField(int n);

  int order() const { return n_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }

  Element constant(const Rational& c) const;
  /// zeta^k for any integer k.
  Element zeta_power(int k) const;

  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Rational& s) const;
  Element multiply(const Element& a, const Element& b) const;

  /// The rational value if every non-constant coordinate vanishes.
  std::optional<Rational> as_rational(const Element& a) const;

 private:
  Element reduce(std::vector<Rational> coeffs) const;

  int n_;
  std::vector<mpz_class> phi_;
};

}  // namespace cyclic
