#pragma once

// Integer polynomials, radical elimination, and an irreducibility certificate
// built from factor-degree patterns modulo small primes plus a Kronecker
// search for integer factors of the degrees the patterns cannot exclude.

#include <optional>
#include <string>
#include <vector>

#include "cyclic/scalar.hpp"

namespace cyclic {

class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  /// Coefficients in ascending degree; trailing zeros are dropped.
  explicit IntegerPolynomial(std::vector<mpz_class> coeffs);
  IntegerPolynomial(std::initializer_list<long> coeffs);

  /// Primitive integer multiple of a rational polynomial, positive leading coefficient.
  static IntegerPolynomial primitive_from(const std::vector<Rational>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpz_class>& coefficients() const { return c_; }
  mpz_class coefficient(int k) const;
  const mpz_class& leading() const { return c_.back(); }

  IntegerPolynomial derivative() const;
  double evaluate(double x) const;
  mpz_class evaluate(const mpz_class& x) const;
  Rational evaluate(const Rational& x) const;

  /// "256x^8 - 512x^6 + 320x^4 - 64x^2 + 1"
  std::string str() const;

  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

 private:
  std::vector<mpz_class> c_;
};

/// scale * sqrt(c_1 + s_1 sqrt(c_2 + s_2 sqrt(... sqrt(innermost)))).
struct RadicalLayer {
  Rational constant;
  int sign;  ///< +1 or -1 in front of the next root
};

struct NestedRadical {
  Rational scale;
  std::vector<RadicalLayer> layers;
  Rational innermost;

  double value() const;
  std::string str() const;
};

/// Squares the radicals away one layer at a time; the result vanishes at the
/// radical's value (and at its sign conjugates).
IntegerPolynomial eliminate_radicals(const NestedRadical& r);

/// sin(pi/24) = 1/2 sqrt(2 - sqrt(2 + sqrt 3))
NestedRadical sin_pi_24_radical();
IntegerPolynomial sin_pi_24_minimal_polynomial();

/// gcd(p, p') is constant over Q.
bool is_squarefree(const IntegerPolynomial& p);

/// Every rational root, by testing +-a/b with a | p(0) and b | leading coefficient.
std::vector<Rational> rational_roots(const IntegerPolynomial& p);

/// Degrees of the irreducible factors of p mod q (sorted), or nullopt when q
/// divides the leading coefficient or p mod q is not squarefree.
std::optional<std::vector<int>> factor_degrees_mod(const IntegerPolynomial& p, int q);

/// Kronecker's method: an integer factor of exactly this degree, if one exists.
/// nullopt with `exhausted` false means the search was too large to finish.
struct FactorSearch {
  std::optional<IntegerPolynomial> factor;
  bool exhausted = false;
  long combinations = 0;
};
FactorSearch find_integer_factor(const IntegerPolynomial& p, int degree, long combination_cap = 2'000'000);

struct PrimePattern {
  int prime;
  std::vector<int> degrees;
};

struct IrreducibilityCertificate {
  int prime = 0;                     ///< the first prime whose pattern was used
  std::vector<int> factor_degrees;   ///< factor degrees mod that prime
  std::vector<PrimePattern> patterns;  ///< every pattern combined
  std::vector<int> searched_degrees;   ///< degrees excluded by the integer factor search
  std::string method;
};

struct CertificateSearch {
  std::optional<IrreducibilityCertificate> certificate;
  std::vector<std::string> log;
};

inline constexpr int kCertificatePrimeBound = 200;
inline constexpr int kMaxCombinedPrimes = 10;

/// Never throws for a squarefree input; an absent certificate means inconclusive
/// or reducible (the log says which).
CertificateSearch search_irreducibility(const IntegerPolynomial& p);

/// Throws NotSquarefree, or NoCertificateFound when the search is inconclusive.
IrreducibilityCertificate irreducibility_certificate(const IntegerPolynomial& p);

}  // namespace cyclic
