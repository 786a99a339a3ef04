#include "cyclic/polynomial.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bitset>
#include <cmath>
#include <map>

#include "cyclic/error.hpp"

namespace cyclic {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over Q, ascending coefficients, no trailing zeros.

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_qpoly(const IntegerPolynomial& p) {
  QPoly out;
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return out;
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly q_add(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

QPoly q_scale(QPoly a, const Rational& s) {
  for (auto& c : a) c *= s;
  trim(a);
  return a;
}

/// Remainder of a divided by non-zero b.
QPoly q_rem(QPoly a, const QPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

QPoly q_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = q_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Polynomials over F_q for small primes q, ascending, no trailing zeros.

using ModPoly = std::vector<long>;

long mod_norm(long v, long q) {
  v %= q;
  return v < 0 ? v + q : v;
}

long mod_inv(long a, long q) {
  long t = 0, new_t = 1, r = q, new_r = mod_norm(a, q);
  while (new_r != 0) {
    const long quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  return mod_norm(t, q);
}

void mod_trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int mdeg(const ModPoly& p) { return static_cast<int>(p.size()) - 1; }

ModPoly mod_rem(ModPoly a, const ModPoly& b, long q) {
  mod_trim(a);
  const long inv = mod_inv(b.back(), q);
  while (a.size() >= b.size()) {
    const long f = a.back() * inv % q;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod_norm(a[shift + j] - f * b[j], q);
    a.pop_back();
    mod_trim(a);
  }
  return a;
}

ModPoly mod_div(ModPoly a, const ModPoly& b, long q) {
  mod_trim(a);
  if (a.size() < b.size()) return {};
  const long inv = mod_inv(b.back(), q);
  ModPoly quot(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    const long f = a.back() * inv % q;
    const std::size_t shift = a.size() - b.size();
    quot[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod_norm(a[shift + j] - f * b[j], q);
    a.pop_back();
    mod_trim(a);
  }
  mod_trim(quot);
  return quot;
}

ModPoly mod_monic(ModPoly p, long q) {
  if (p.empty()) return p;
  const long inv = mod_inv(p.back(), q);
  for (long& c : p) c = c * inv % q;
  return p;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, long q) {
  mod_trim(a);
  mod_trim(b);
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return mod_monic(std::move(a), q);
}

ModPoly mod_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& f, long q) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % q;
  }
  return mod_rem(std::move(out), f, q);
}

ModPoly mod_powmod(ModPoly base, long e, const ModPoly& f, long q) {
  ModPoly result{1};
  base = mod_rem(std::move(base), f, q);
  while (e > 0) {
    if (e & 1) result = mod_mulmod(result, base, f, q);
    e >>= 1;
    if (e > 0) base = mod_mulmod(base, base, f, q);
  }
  return result;
}

ModPoly mod_sub(ModPoly a, const ModPoly& b, long q) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_norm(a[i] - b[i], q);
  mod_trim(a);
  return a;
}

ModPoly reduce_mod(const IntegerPolynomial& p, long q) {
  ModPoly out;
  for (const auto& c : p.coefficients()) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(q));
    out.push_back(r.get_si());
  }
  mod_trim(out);
  return out;
}

ModPoly mod_derivative(const ModPoly& p, long q) {
  ModPoly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(static_cast<long>(k) % q * p[k] % q);
  mod_trim(out);
  return out;
}

bool is_prime_small(int v) {
  if (v < 2) return false;
  for (int d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Integer divisors for the Kronecker search.

/// Positive divisors of |v|, or nullopt if v could not be fully factored.
std::optional<std::vector<mpz_class>> positive_divisors(mpz_class v) {
  v = abs(v);
  if (v == 0) return std::nullopt;
  std::map<mpz_class, int> factors;
  for (unsigned long d = 2; d < 100000 && mpz_class(d) * d <= v; ++d) {
    while (mpz_divisible_ui_p(v.get_mpz_t(), d) != 0) {
      factors[mpz_class(d)] += 1;
      v /= d;
    }
  }
  if (v > 1) {
    if (mpz_probab_prime_p(v.get_mpz_t(), 30) == 0) return std::nullopt;
    factors[v] += 1;
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [prime, exp] : factors) {
    const std::size_t base = divs.size();
    mpz_class pw = 1;
    for (int e = 1; e <= exp; ++e) {
      pw *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::string join_degrees(const std::vector<int>& degrees) {
  std::string out;
  for (std::size_t i = 0; i < degrees.size(); ++i) out += (i ? "," : "") + std::to_string(degrees[i]);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntegerPolynomial

IntegerPolynomial::IntegerPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntegerPolynomial IntegerPolynomial::primitive_from(const std::vector<Rational>& coeffs) {
  mpz_class lcm_den = 1;
  for (const auto& c : coeffs) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class content = 0;
  for (const auto& c : coeffs) {
    mpz_class v = c.numerator() * (lcm_den / c.denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  IntegerPolynomial out(std::move(ints));
  if (out.is_zero()) return out;
  if (out.leading() < 0) content = -content;
  for (auto& c : out.c_) c /= content;
  return out;
}

mpz_class IntegerPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

IntegerPolynomial IntegerPolynomial::derivative() const {
  std::vector<mpz_class> out;
  for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * static_cast<unsigned long>(k));
  return IntegerPolynomial(std::move(out));
}

double IntegerPolynomial::evaluate(double x) const {
  long double acc = 0.0L;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + static_cast<long double>(c_[k].get_d());
  return static_cast<double>(acc);
}

mpz_class IntegerPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

Rational IntegerPolynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + Rational(c_[k]);
  return acc;
}

std::string IntegerPolynomial::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const mpz_class& c = c_[k];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Radicals

double NestedRadical::value() const {
  double v = std::sqrt(innermost.to_double());
  for (std::size_t j = layers.size(); j-- > 0;) {
    v = std::sqrt(layers[j].constant.to_double() + layers[j].sign * v);
  }
  return scale.to_double() * v;
}

std::string NestedRadical::str() const {
  std::string inner = "sqrt(" + innermost.str() + ")";
  for (std::size_t j = layers.size(); j-- > 0;) {
    inner = "sqrt(" + layers[j].constant.str() + (layers[j].sign < 0 ? " - " : " + ") + inner + ")";
  }
  return scale == 1 ? inner : scale.str() + " * " + inner;
}

IntegerPolynomial eliminate_radicals(const NestedRadical& r) {
  if (r.scale == 0) throw DomainError(ErrorCode::InvalidSpec, "radical scale must be non-zero");
  // radicand of the outermost root: (x / scale)^2
  QPoly radicand{Rational(0), Rational(0), Rational(1) / (r.scale * r.scale)};
  for (const auto& layer : r.layers) {
    // sqrt(next) = sign * (radicand - constant), so next = (radicand - constant)^2
    const QPoly shifted = q_add(radicand, QPoly{-layer.constant});
    radicand = q_mul(shifted, shifted);
  }
  return IntegerPolynomial::primitive_from(q_add(radicand, QPoly{-r.innermost}));
}

NestedRadical sin_pi_24_radical() {
  return {Rational(1, 2), {{Rational(2), -1}, {Rational(2), +1}}, Rational(3)};
}

IntegerPolynomial sin_pi_24_minimal_polynomial() { return eliminate_radicals(sin_pi_24_radical()); }

// ---------------------------------------------------------------------------
// Rational structure

bool is_squarefree(const IntegerPolynomial& p) {
  if (p.degree() < 1) return true;
  return q_gcd(to_qpoly(p), to_qpoly(p.derivative())).size() == 1;
}

std::vector<Rational> rational_roots(const IntegerPolynomial& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  // Strip factors of x.
  std::vector<mpz_class> coeffs = p.coefficients();
  std::size_t low = 0;
  while (coeffs[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  const IntegerPolynomial q(std::vector<mpz_class>(coeffs.begin() + static_cast<long>(low), coeffs.end()));
  if (q.degree() < 1) return roots;
  const auto nums = positive_divisors(q.coefficient(0));
  const auto dens = positive_divisors(q.leading());
  if (!nums || !dens) {
    throw DomainError(ErrorCode::NotRepresentable, "rational root test could not factor the end coefficients");
  }
  std::vector<Rational> candidates;
  for (const auto& a : *nums) {
    for (const auto& b : *dens) {
      candidates.emplace_back(mpq_class(a, b));
      candidates.emplace_back(mpq_class(-a, b));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& c : candidates) {
    if (q.evaluate(c) == 0) roots.push_back(c);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<std::vector<int>> factor_degrees_mod(const IntegerPolynomial& p, int q) {
  if (!is_prime_small(q) || p.degree() < 1) return std::nullopt;
  if (mpz_divisible_ui_p(p.leading().get_mpz_t(), static_cast<unsigned long>(q)) != 0) return std::nullopt;
  ModPoly f = mod_monic(reduce_mod(p, q), q);
  if (mdeg(mod_gcd(f, mod_derivative(f, q), q)) != 0) return std::nullopt;

  // Distinct-degree factorization.
  std::vector<int> degrees;
  const ModPoly x{0, 1};
  ModPoly h = x;
  for (int d = 1; 2 * d <= mdeg(f); ++d) {
    h = mod_powmod(h, q, f, q);
    const ModPoly g = mod_gcd(f, mod_sub(h, x, q), q);
    if (mdeg(g) > 0) {
      for (int k = 0; k < mdeg(g) / d; ++k) degrees.push_back(d);
      f = mod_div(f, g, q);
      h = mod_rem(h, f, q);
    }
  }
  if (mdeg(f) > 0) degrees.push_back(mdeg(f));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

FactorSearch find_integer_factor(const IntegerPolynomial& p, int degree, long combination_cap) {
  FactorSearch result;
  if (degree < 1 || degree >= p.degree()) {
    result.exhausted = true;
    return result;
  }
  // Evaluation points whose values factor easily, fewest divisors first.
  struct Point {
    mpz_class a;
    std::vector<mpz_class> divisors;
  };
  std::vector<Point> points;
  for (long step = 0; step <= 60; ++step) {
    const long a = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
    const mpz_class v = p.evaluate(mpz_class(a));
    if (v == 0) {
      // a is a root: x - a is a factor of degree 1.
      if (degree == 1) {
        result.factor = IntegerPolynomial({-a, 1});
        result.exhausted = true;
        return result;
      }
      continue;
    }
    if (auto divs = positive_divisors(v)) points.push_back({mpz_class(a), std::move(*divs)});
  }
  if (static_cast<int>(points.size()) < degree + 1) return result;
  std::stable_sort(points.begin(), points.end(),
                   [](const Point& x, const Point& y) { return x.divisors.size() < y.divisors.size(); });
  points.resize(static_cast<std::size_t>(degree + 1));

  // Candidate values: the first point positive only (g and -g are the same factor).
  std::vector<std::vector<mpz_class>> choices;
  long double total = 1.0L;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<mpz_class> vals;
    for (const auto& d : points[i].divisors) {
      vals.push_back(d);
      if (i > 0) vals.push_back(-d);
    }
    total *= static_cast<long double>(vals.size());
    choices.push_back(std::move(vals));
  }
  if (total > static_cast<long double>(combination_cap)) return result;

  // Lagrange basis polynomials over the chosen points.
  std::vector<QPoly> basis;
  for (std::size_t i = 0; i < points.size(); ++i) {
    QPoly b{Rational(1)};
    Rational denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      b = q_mul(b, QPoly{Rational(mpz_class(-points[j].a)), Rational(1)});
      denom *= Rational(mpz_class(points[i].a - points[j].a));
    }
    basis.push_back(q_scale(b, Rational(1) / denom));
  }

  const QPoly target = to_qpoly(p);
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    ++result.combinations;
    QPoly g;
    for (std::size_t i = 0; i < choices.size(); ++i) g = q_add(g, q_scale(basis[i], Rational(choices[i][idx[i]])));
    const bool integral = std::all_of(g.begin(), g.end(), [](const Rational& c) { return c.is_integer(); });
    if (static_cast<int>(g.size()) - 1 == degree && integral && q_rem(target, g).empty()) {
      std::vector<mpz_class> ints;
      for (const auto& c : g) ints.push_back(c.numerator());
      result.factor = IntegerPolynomial(std::move(ints));
      result.exhausted = true;
      return result;
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  result.exhausted = true;
  return result;
}

CertificateSearch search_irreducibility(const IntegerPolynomial& p) {
  CertificateSearch out;
  const int n = p.degree();
  if (n < 1) {
    out.log.push_back("constant polynomial: nothing to certify");
    return out;
  }
  if (!is_squarefree(p)) throw DomainError(ErrorCode::NotSquarefree, p.str() + " has a repeated factor");
  if (n >= 128) throw DomainError(ErrorCode::InvalidSpec, "degree too large for the certificate search");
  if (n == 1) {
    out.certificate = IrreducibilityCertificate{0, {1}, {}, {}, "linear"};
    out.log.push_back("degree 1: irreducible");
    return out;
  }

  std::vector<PrimePattern> usable;
  for (int q = 2; q < kCertificatePrimeBound; ++q) {
    if (!is_prime_small(q)) continue;
    auto degrees = factor_degrees_mod(p, q);
    if (!degrees) continue;
    if (degrees->size() == 1) {
      out.log.push_back(fmt::format("mod {}: irreducible", q));
      out.certificate = IrreducibilityCertificate{q, *degrees, {{q, *degrees}}, {}, "irreducible mod q"};
      return out;
    }
    usable.push_back({q, std::move(*degrees)});
  }
  out.log.push_back(fmt::format("no prime below {} gives an irreducible reduction", kCertificatePrimeBound));

  // A factor over Q of degree d reduces to a product of mod-q factors, so d is a
  // sub-multiset sum of every pattern. Only d <= n/2 needs excluding.
  std::bitset<128> possible;
  for (int d = 1; 2 * d <= n; ++d) possible.set(static_cast<std::size_t>(d));
  std::vector<PrimePattern> combined;
  for (const auto& pat : usable) {
    if (static_cast<int>(combined.size()) == kMaxCombinedPrimes || possible.none()) break;
    std::bitset<128> sums;
    sums.set(0);
    for (int d : pat.degrees) sums |= sums << static_cast<std::size_t>(d);
    possible &= sums;
    combined.push_back(pat);
    std::string left;
    for (int d = 1; 2 * d <= n; ++d) {
      if (possible.test(static_cast<std::size_t>(d))) left += (left.empty() ? "" : ",") + std::to_string(d);
    }
    out.log.push_back(fmt::format("mod {}: factor degrees {}; factor degrees still possible: {{{}}}", pat.prime,
                                  join_degrees(pat.degrees), left));
  }
  if (combined.empty()) {
    out.log.push_back("no usable prime");
    return out;
  }

  IrreducibilityCertificate cert{combined.front().prime, combined.front().degrees, combined, {}, "degree patterns"};
  for (int d = 1; 2 * d <= n; ++d) {
    if (!possible.test(static_cast<std::size_t>(d))) continue;
    const FactorSearch search = find_integer_factor(p, d);
    if (search.factor) {
      out.log.push_back(fmt::format("integer factor of degree {} found: {}", d, search.factor->str()));
      return out;
    }
    if (!search.exhausted) {
      out.log.push_back(fmt::format("integer factor search for degree {} too large; inconclusive", d));
      return out;
    }
    out.log.push_back(fmt::format("no integer factor of degree {} ({} candidates tried)", d, search.combinations));
    cert.searched_degrees.push_back(d);
  }
  if (!cert.searched_degrees.empty()) cert.method = "degree patterns + integer factor search";
  out.certificate = cert;
  return out;
}

IrreducibilityCertificate irreducibility_certificate(const IntegerPolynomial& p) {
  auto search = search_irreducibility(p);
  if (!search.certificate) {
    std::string log;
    for (const auto& line : search.log) log += "\n  " + line;
    throw DomainError(ErrorCode::NoCertificateFound, "inconclusive for " + p.str() + ":" + log);
  }
  return *search.certificate;
}

}  // namespace cyclic
