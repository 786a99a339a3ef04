#include "cyclic/cyclotomic.hpp"

#include <stdexcept>
#include <string>

#include "cyclic/error.hpp"

namespace cyclic {

namespace {

using IntPoly = std::vector<mpz_class>;

// Exact quotient of a by a monic divisor b (remainder must vanish).
IntPoly divide_exact_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("cyclotomic: divisor degree too large");
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const mpz_class coef = a[i];
    if (coef == 0) continue;
    q[i - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= coef * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw std::logic_error("cyclotomic: inexact division");
  }
  return q;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  if (n < 1) throw DomainError(ErrorCode::InvalidSpec, "cyclotomic order must be >= 1");
  // x^n - 1 = prod_{d | n} Phi_d(x)
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact_monic(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

CyclotomicField::CyclotomicField(int n) : n_(n), phi_(cyclotomic_polynomial(n)) {}

CyclotomicField::Element CyclotomicField::constant(const Rational& c) const {
  Element e(static_cast<std::size_t>(degree()), Rational(0));
  e[0] = c;
  return e;
}

CyclotomicField::Element CyclotomicField::zeta_power(int k) const {
  const int r = ((k % n_) + n_) % n_;
  std::vector<Rational> coeffs(static_cast<std::size_t>(r) + 1, Rational(0));
  coeffs[static_cast<std::size_t>(r)] = Rational(1);
  return reduce(std::move(coeffs));
}

CyclotomicField::Element CyclotomicField::add(const Element& a, const Element& b) const {
  Element out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

CyclotomicField::Element CyclotomicField::scale(const Element& a, const Rational& s) const {
  Element out(a);
  for (auto& c : out) c *= s;
  return out;
}

CyclotomicField::Element CyclotomicField::multiply(const Element& a, const Element& b) const {
  std::vector<Rational> prod(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  return reduce(std::move(prod));
}

std::optional<Rational> CyclotomicField::as_rational(const Element& a) const {
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] != 0) return std::nullopt;
  }
  return a.empty() ? Rational(0) : a[0];
}

CyclotomicField::Element CyclotomicField::reduce(std::vector<Rational> coeffs) const {
  const std::size_t d = static_cast<std::size_t>(degree());
  // Phi_n is monic: x^d = -(phi_0 + ... + phi_{d-1} x^{d-1}).
  for (std::size_t i = coeffs.size(); i-- > d;) {
    if (coeffs[i] == 0) continue;
    const Rational top = coeffs[i];
    coeffs[i] = Rational(0);
    for (std::size_t j = 0; j < d; ++j) {
      if (phi_[j] != 0) coeffs[i - d + j] -= top * Rational(phi_[j]);
    }
  }
  coeffs.resize(d, Rational(0));
  return coeffs;
}

}  // namespace cyclic
