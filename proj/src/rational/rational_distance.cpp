#include "cyclic/rational_distance.hpp"

#include <fmt/format.h>

#include <random>

namespace cyclic {

bool is_rational_square(const Rational& v) { return v.sign() >= 0 && try_sqrt(v).has_value(); }

AreaConditionReport necessary_condition_areas(int n, const DistanceMultiset<Rational>& d) {
  if (n != 4 && n != 6) throw DomainError(ErrorCode::InvalidSpec, "area conditions exist for n = 4 and 6 only");
  if (d.size() != n) {
    throw DomainError(ErrorCode::InvalidSpec,
                      "expected " + std::to_string(n) + " distances, got " + std::to_string(d.size()));
  }
  AreaConditionReport report{n, {}, false, true};
  for (const auto& v : d.sq) report.all_distances_rational = report.all_distances_rational && is_rational_square(v);
  auto add = [&](std::string window, Rational value) {
    const bool rational = is_rational_square(value);
    report.conditions.push_back({std::move(window), std::move(value), rational});
  };
  if (n == 4) {
    add("(d1, sqrt2 d2, d3)", heron_area_16sq(d(1), Rational(2) * d(2), d(3)));
    add("(d2, sqrt2 d3, d4)", heron_area_16sq(d(2), Rational(2) * d(3), d(4)));
  } else {
    add("sqrt3 (d1, d3, d5)", Rational(3) * heron_area_16sq(d(1), d(3), d(5)));
    add("sqrt3 (d2, d4, d6)", Rational(3) * heron_area_16sq(d(2), d(4), d(6)));
  }
  report.areas_equal = report.conditions[0].value == report.conditions[1].value;
  return report;
}

AreaConditionReport necessary_condition_areas(int n, const std::vector<std::string>& distances) {
  std::vector<Rational> sq;
  for (const auto& text : distances) {
    auto v = Rational::parse(text);
    if (!v) throw DomainError(ErrorCode::NonRationalInput, "'" + text + "' is not a rational number");
    if (v->sign() < 0) throw DomainError(ErrorCode::InvalidSpec, "distance '" + text + "' is negative");
    sq.push_back(*v * *v);
  }
  return necessary_condition_areas(n, DistanceMultiset<Rational>(std::move(sq)));
}

std::string RationalDistanceReport::render() const {
  std::string out = text;
  out += "```report\n";
  for (const auto& [key, value] : block) out += key + ": " + value + "\n";
  out += "```\n";
  out += final_line + "\n";
  return out;
}

RationalDistanceReport rational_distance_report() {
  constexpr int n = 24;
  RationalDistanceReport report;
  std::string& t = report.text;
  const double s = std::sin(std::numbers::pi / n);
  const double R = 1.0 / (2.0 * s);

  t += "Rational distances to the vertices of the unit regular 24-gon\n\n";

  // 1. The quartic family.
  t += "1. For a point at distances d_1..d_n from the vertices of a regular n-gon with side 1,\n"
       "   x = sin(pi/n) satisfies 8(S4 - S2^2) x^4 - 4 S2 x^2 + 1 = 0, where S2 and S4 are the\n"
       "   averages of d_i^2 and d_i^4. Rational distances make S2 and S4 rational, so sin(pi/24)\n"
       "   would be a root of a non-zero rational quartic and its degree over Q would be at most 4.\n";
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double L = 2.0 * R * unit(rng);
  const double alpha = 2.0 * std::numbers::pi * unit(rng);
  const auto d = polygon_distances(PolygonSpec<double>(n, R), PlanePlacement<double>(L, alpha));
  const double S2 = sum_of_powers(d, 1) / n;
  const double S4 = sum_of_powers(d, 2) / n;
  const auto q = quartic_witness(S2, S4);
  t += fmt::format("   Spot check: L = {}, alpha = {}, S2 = {}, S4 = {}\n", format_scalar(L), format_scalar(alpha),
                   format_scalar(S2), format_scalar(S4));
  t += fmt::format("   quartic {} x^4 {} x^2 + 1 at sin(pi/24): {:.3e}\n", format_scalar(q.c4), format_scalar(q.c2),
                   q.evaluate(s));

  // 2. The polynomial of sin(pi/24).
  const NestedRadical radical = sin_pi_24_radical();
  const IntegerPolynomial poly = eliminate_radicals(radical);
  t += fmt::format("\n2. sin(pi/24) = {} = {:.12f}\n", radical.str(), radical.value());
  t += fmt::format("   Eliminating the radicals: {} = 0 (value at sin(pi/24): {:.3e})\n", poly.str(),
                   poly.evaluate(radical.value()));
  const auto roots = rational_roots(poly);
  t += roots.empty() ? "   Rational roots: none\n" : fmt::format("   Rational roots: {}\n", roots.size());

  // The centroid, where the quartic degenerates: every distance is R.
  std::vector<mpz_class> in_u;
  for (int k = 0; k <= poly.degree(); k += 2) in_u.push_back(poly.coefficient(k));
  const IntegerPolynomial poly_u(std::move(in_u));
  const bool r_irrational = rational_roots(poly_u).empty();
  t += fmt::format("   sin^2(pi/24) is a root of {} with {} rational roots, so R^2 = 1/(4 sin^2(pi/24)) is {}:\n"
                   "   the centroid (S4 = S2^2, quartic degenerate) is at irrational distance R = {} from every vertex.\n",
                   poly_u.str(), rational_roots(poly_u).size(), r_irrational ? "irrational" : "rational",
                   format_scalar(R));

  // 3. Certificate.
  t += "\n3. Irreducibility certificate:\n";
  const CertificateSearch search = search_irreducibility(poly);
  for (const auto& line : search.log) t += "   " + line + "\n";

  report.block.emplace_back("degree", std::to_string(poly.degree()));
  if (search.certificate && r_irrational) {
    const auto& cert = *search.certificate;
    std::string degrees;
    for (std::size_t i = 0; i < cert.factor_degrees.size(); ++i) {
      degrees += (i ? "," : "") + std::to_string(cert.factor_degrees[i]);
    }
    t += fmt::format("   {} is irreducible over Q ({}), so sin(pi/24) has degree {}.\n", poly.str(), cert.method,
                     poly.degree());
    t += fmt::format("\n4. Degree {} > 4 contradicts step 1.\n", poly.degree());
    report.conclusive = true;
    report.block.emplace_back("certifying_prime", std::to_string(cert.prime));
    report.block.emplace_back("factor_degrees", degrees);
    report.block.emplace_back("conclusion", "degree > 4");
    report.final_line =
        "Conclusion: no point in the plane is at rational distances from all vertices of the unit regular 24-gon; "
        "no rational-distance point exists";
  } else {
    t += "   No certificate: the degree of sin(pi/24) is not established here.\n";
    report.conclusive = false;
    report.block.emplace_back("certifying_prime", "none");
    report.block.emplace_back("factor_degrees", "none");
    report.block.emplace_back("conclusion", "inconclusive");
    report.final_line = "Conclusion: inconclusive";
  }
  t += "\n";
  return report;
}

}  // namespace cyclic
