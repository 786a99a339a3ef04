#include "cyclic/scalar.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <limits>

namespace cyclic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::InvalidAverage: return "InvalidAverage";
    case ErrorCode::Unattainable: return "Unattainable";
    case ErrorCode::InconsistentDistances: return "InconsistentDistances";
    case ErrorCode::OddN: return "OddN";
    case ErrorCode::DivisorMismatch: return "DivisorMismatch";
    case ErrorCode::TetrahedronHasNoAntipodes: return "TetrahedronHasNoAntipodes";
    case ErrorCode::DegenerateQuartic: return "DegenerateQuartic";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NoCertificateFound: return "NoCertificateFound";
    case ErrorCode::NonRationalInput: return "NonRationalInput";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
  }
  return "UnknownError";
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational::Rational(const mpz_class& z) : q_(z) {}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("Rational::from_double: non-finite value");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), v);
  return Rational(std::move(q));
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::optional<mpz_class> parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(mpq_class(*num, *den));
  }

  // Decimal with optional exponent: [sign] digits [. digits] [e [sign] digits]
  bool negative = false;
  std::string_view s = text;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto ez = parse_integer(s.substr(e + 1));
    if (!ez || !ez->fits_slong_p()) return std::nullopt;
    exponent = ez->get_si();
    if (exponent > 4096 || exponent < -4096) return std::nullopt;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto int_part = s.substr(0, dot);
    auto frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
      return std::nullopt;
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) return std::nullopt;
    digits = std::string(s);
  }
  mpz_class mant(digits, 10);
  if (negative) mant = -mant;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(mpq_class(mant * ten_pow));
  return Rational(mpq_class(mant, ten_pow));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

// ---------------------------------------------------------------------------
// QSqrt5

int QSqrt5::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 5 b^2.
  const Rational a2 = a_ * a_;
  const Rational b2 = Rational(5) * b_ * b_;
  if (a2 == b2) return 0;  // impossible for nonzero rationals since sqrt5 is irrational
  return a2 > b2 ? sa : sb;
}

std::string QSqrt5::str() const {
  if (b_ == 0) return a_.str();
  std::string tail;
  if (b_ == 1) {
    tail = "√5";
  } else if (b_ == -1) {
    tail = "-√5";
  } else {
    tail = b_.str() + "√5";
  }
  if (a_ == 0) return tail;
  if (b_.sign() > 0) return a_.str() + "+" + tail;
  return a_.str() + tail;
}

QSqrt5& QSqrt5::operator*=(const QSqrt5& o) {
  Rational a = a_ * o.a_ + Rational(5) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt5& QSqrt5::operator/=(const QSqrt5& o) {
  const Rational n = o.norm();
  if (n == 0) throw std::domain_error("QSqrt5: division by zero");
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

// ---------------------------------------------------------------------------
// Square roots

std::optional<double> try_sqrt(double v) {
  if (v < 0.0 || std::isnan(v)) return std::nullopt;
  return std::sqrt(v);
}

std::optional<Rational> try_sqrt(const Rational& v) {
  if (v.sign() < 0) return std::nullopt;
  const mpz_class num = v.numerator();
  const mpz_class den = v.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

std::optional<QSqrt5> try_sqrt(const QSqrt5& v) {
  if (v.sign() < 0) return std::nullopt;
  const Rational& a = v.rational_part();
  const Rational& b = v.sqrt5_part();
  if (b == 0) {
    if (auto r = try_sqrt(a)) return QSqrt5(*r);
    // sqrt(a) = s*sqrt5  <=>  a/5 = s^2
    if (auto s = try_sqrt(a / Rational(5))) return QSqrt5(Rational(0), *s);
    return std::nullopt;
  }
  // (x + y sqrt5)^2 = a + b sqrt5 with x != 0:  x^2 = (a +- sqrt(a^2 - 5 b^2)) / 2, y = b / (2x)
  auto n = try_sqrt(v.norm());
  if (!n) return std::nullopt;
  for (const Rational& x2 : {(a + *n) / Rational(2), (a - *n) / Rational(2)}) {
    if (x2.sign() <= 0) continue;
    if (auto x = try_sqrt(x2)) {
      QSqrt5 root(*x, b / (Rational(2) * *x));
      if (root.sign() < 0) root = -root;
      if (root * root == v) return root;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Formatting

std::string format_scalar(double v) {
  if (v == 0.0) return "0";  // avoid "-0"
  return fmt::format("{:.12g}", v);
}
std::string format_scalar(const Rational& v) { return v.str(); }
std::string format_scalar(const QSqrt5& v) { return v.str(); }

std::string format_roundtrip(double v) {
  if (v == 0.0) return "0";
  return fmt::format("{:.17g}", v);
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool approx_equal(double a, double b, double rel, double abs_floor) {
  const double diff = std::fabs(a - b);
  if (diff <= abs_floor) return true;
  return diff <= rel * std::max(std::fabs(a), std::fabs(b));
}

double relative_error(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  if (scale == 0.0) return 0.0;
  return std::fabs(a - b) / scale;
}

}  // namespace cyclic
