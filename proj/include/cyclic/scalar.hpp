#pragma once

// Scalar backends shared by every module.
//
//  * double    - the float backend; comparisons take a relative tolerance.
//  * Rational  - exact arbitrary-precision rationals, always in lowest terms.
//  * QSqrt5    - exact elements p + q*sqrt(5) of the quadratic field Q(sqrt 5),
//                needed for icosahedron/dodecahedron coordinates (phi lives there).
//
// Generic code is written against the `Scalar` concept and the free functions
// to_double / try_sqrt / format_scalar / from_integer that every backend provides.

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include "cyclic/error.hpp"

namespace cyclic {

class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      q_ = static_cast<long>(v);
    } else {
      q_ = static_cast<unsigned long>(v);
    }
  }

  Rational(long num, long den);
  explicit Rational(mpq_class q);
  explicit Rational(const mpz_class& z);

  /// Exact value of a finite double (every double is a dyadic rational).
  static Rational from_double(double v);

  /// Accepts "p", "p/q", and plain decimals such as "-1.25" or "3e-2".
  static std::optional<Rational> parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

 private:
  mpq_class q_;
};

/// Element a + b*sqrt(5) with rational a, b.
class QSqrt5 {
 public:
  QSqrt5() = default;

  template <std::integral I>
  QSqrt5(I v) : a_(v) {}  // NOLINT(google-explicit-constructor)

  QSqrt5(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QSqrt5(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt5 sqrt5() { return {Rational(0), Rational(1)}; }
  /// (1 + sqrt 5) / 2
  static QSqrt5 golden_ratio() { return {Rational(1, 2), Rational(1, 2)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }

  QSqrt5 conjugate() const { return {a_, -b_}; }
  /// Field norm a^2 - 5 b^2.
  Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }

  int sign() const;
  double to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(5.0); }
  std::string str() const;

  QSqrt5& operator+=(const QSqrt5& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QSqrt5& operator-=(const QSqrt5& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QSqrt5& operator*=(const QSqrt5& o);
  QSqrt5& operator/=(const QSqrt5& o);

  friend QSqrt5 operator+(QSqrt5 a, const QSqrt5& b) { return a += b; }
  friend QSqrt5 operator-(QSqrt5 a, const QSqrt5& b) { return a -= b; }
  friend QSqrt5 operator*(QSqrt5 a, const QSqrt5& b) { return a *= b; }
  friend QSqrt5 operator/(QSqrt5 a, const QSqrt5& b) { return a /= b; }
  friend QSqrt5 operator-(const QSqrt5& a) { return {-a.a_, -a.b_}; }

  friend bool operator==(const QSqrt5& x, const QSqrt5& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const QSqrt5& x, const QSqrt5& y) {
    return (x - y).sign() <=> 0;
  }

 private:
  Rational a_;
  Rational b_;
};

// ---------------------------------------------------------------------------
// Backend traits as overload sets.

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.to_double(); }
inline double to_double(const QSqrt5& v) { return v.to_double(); }

/// Square root if it exists in the backend: always for non-negative doubles,
/// only for perfect squares in the exact backends.
std::optional<double> try_sqrt(double v);
std::optional<Rational> try_sqrt(const Rational& v);
std::optional<QSqrt5> try_sqrt(const QSqrt5& v);

/// Float mode prints 12 significant digits; exact modes print "p/q" and "p+q√5".
std::string format_scalar(double v);
std::string format_scalar(const Rational& v);
std::string format_scalar(const QSqrt5& v);

/// 17 significant digits, used where text must round-trip to the same double.
std::string format_roundtrip(double v);

template <class F>
concept Scalar = std::regular<F> && std::totally_ordered<F> &&
                 requires(const F a, const F b) {
                   { a + b } -> std::convertible_to<F>;
                   { a - b } -> std::convertible_to<F>;
                   { a * b } -> std::convertible_to<F>;
                   { a / b } -> std::convertible_to<F>;
                   { -a } -> std::convertible_to<F>;
                   { F(1) };
                   { to_double(a) } -> std::convertible_to<double>;
                   { format_scalar(a) } -> std::convertible_to<std::string>;
                   { try_sqrt(a) };
                 };

template <class F>
inline constexpr bool is_exact_v = !std::is_floating_point_v<F>;

template <class F>
inline constexpr bool has_sqrt5_v = std::is_same_v<F, QSqrt5> || std::is_floating_point_v<F>;

template <Scalar F>
F from_integer(const mpz_class& z) {
  if constexpr (std::is_floating_point_v<F>) {
    return static_cast<F>(z.get_d());
  } else {
    return F(Rational(z));
  }
}

/// Square root or DomainError(NotRepresentable).
template <Scalar F>
F scalar_sqrt(const F& v) {
  auto r = try_sqrt(v);
  if (!r) {
    throw DomainError(ErrorCode::NotRepresentable,
                      "square root of " + format_scalar(v) +
                          " is not representable in this backend; use the float backend");
  }
  return *r;
}

template <Scalar F>
F pow_int(F base, unsigned exp) {
  F result(1);
  while (exp > 0) {
    if (exp & 1U) result = result * base;
    exp >>= 1U;
    if (exp > 0) base = base * base;
  }
  return result;
}

template <Scalar F>
F abs_value(const F& v) {
  return v < F(0) ? -v : v;
}

/// Golden ratio; only in backends that contain sqrt(5).
template <Scalar F>
F golden_ratio() {
  if constexpr (std::is_same_v<F, QSqrt5>) {
    return QSqrt5::golden_ratio();
  } else if constexpr (std::is_floating_point_v<F>) {
    return static_cast<F>((1.0 + std::sqrt(5.0)) / 2.0);
  } else {
    throw DomainError(ErrorCode::NotRepresentable,
                      "the golden ratio needs the Q(sqrt5) or float backend");
  }
}

/// Exact binomial coefficient (arbitrary size).
mpz_class binomial(unsigned n, unsigned k);

// ---------------------------------------------------------------------------
// Comparison contract.

inline constexpr double kDefaultRelTol = 1e-9;

/// |a - b| <= rel * max(|a|, |b|), or |a - b| <= abs_floor.
bool approx_equal(double a, double b, double rel = kDefaultRelTol, double abs_floor = 0.0);

/// Relative error |a - b| / max(|a|, |b|); 0 when both are 0.
double relative_error(double a, double b);

/// Exact equality in exact backends, relative tolerance for floats.
template <Scalar F>
bool scalars_equal(const F& a, const F& b, double rel = kDefaultRelTol) {
  if constexpr (is_exact_v<F>) {
    return a == b;
  } else {
    return approx_equal(to_double(a), to_double(b), rel);
  }
}

}  // namespace cyclic
