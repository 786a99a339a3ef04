#include "cyclic/app/errata.hpp"

#include <fmt/format.h>

#include <cmath>

#include "cyclic/polygon.hpp"
#include "cyclic/solid.hpp"

namespace cyclic::app {

namespace {

double rel(double lhs, double rhs) { return std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs)); }

struct SquareData {
  double R, L, S2, S4, sum2, sum4;
};

SquareData square_sample() {
  const double R = 1.5, L = 0.7, alpha = 0.4;
  const auto d = polygon_distances(PolygonSpec<double>(4, R), PlanePlacement<double>(L, alpha));
  const double s2 = sum_of_powers(d, 1);
  const double s4 = sum_of_powers(d, 2);
  return {R, L, s2 / 4, s4 / 4, s2, s4};
}

}  // namespace

std::vector<ErratumCheck> check_errata() {
  std::vector<ErratumCheck> out;
  const SquareData sq = square_sample();
  const double R2 = sq.R * sq.R;
  const std::string square_evidence = fmt::format("square placement R={}, L={}, alpha=0.4", sq.R, sq.L);

  {
    const double rhs = (sq.S2 + R2) * (sq.S2 + R2);
    out.push_back({"square: system of averages", "S4^(4) + 3R^2 = (S4^(2) + R^2)^2", "S4^(4) + 3R^4 = (S4^(2) + R^2)^2",
                   square_evidence, rel(sq.S4 + 3 * R2, rhs), rel(sq.S4 + 3 * R2 * R2, rhs)});
  }
  {
    const double rhs = (3 * sq.sum2 * sq.sum2 - 8 * sq.sum4) / 16;
    out.push_back({"square: discriminant of the averages", "3(S^(2))^2 - 2S^(2) = [3(sum d^2)^2 - 8 sum d^4] / 16",
                   "3(S^(2))^2 - 2S^(4) = [3(sum d^2)^2 - 8 sum d^4] / 16", square_evidence,
                   rel(3 * sq.S2 * sq.S2 - 2 * sq.S2, rhs), rel(3 * sq.S2 * sq.S2 - 2 * sq.S4, rhs)});
  }
  {
    const double R = 0.9, L = 1.3, alpha = 0.25;
    const double brute = power_sum_brute(PolygonSpec<double>(9, R), 8, PlanePlacement<double>(L, alpha)) / 9;
    const double r2 = R * R, l2 = L * L, A = r2 + l2;
    const double head = std::pow(A, 8) + 56 * r2 * l2 * std::pow(A, 6) + 420 * std::pow(r2 * l2, 2) * std::pow(A, 4) +
                        560 * std::pow(r2 * l2, 3) * A * A;
    const double printed = head + 70 * std::pow(r2, 4) * std::pow(l2, 3);
    const double corrected = head + 70 * std::pow(r2, 4) * std::pow(l2, 4);
    out.push_back({"nonagon/decagon: S^(16)", "... + 70R^8L^6", "... + 70R^8L^8",
                   fmt::format("9-gon vertex sum R={}, L={}, alpha={}", R, L, alpha), rel(printed, brute),
                   rel(corrected, brute)});
  }
  {
    const auto spec = SolidSpec<double>::from_scale(SolidKind::Dodecahedron, 1.0);
    const SpacePlacement<double> p{0.3, -0.8, 1.1};
    const double brute = solid_power_sum_brute(spec, 5, p);
    const double r2 = spec.R_sq, l2 = p.L_sq(), A = r2 + l2, P = r2 * l2;
    const double tail = 40.0 / 3.0 * P * std::pow(A, 3) + 16 * P * P * A;
    out.push_back({"dodecahedron: sum of d^10", "20((R^2 + L^2)^2 + 40/3 R^2L^2(R^2 + L^2)^3 + 16R^4L^4(R^2 + L^2))",
                   "20((R^2 + L^2)^5 + 40/3 R^2L^2(R^2 + L^2)^3 + 16R^4L^4(R^2 + L^2))",
                   "dodecahedron vertex sum c=1 at (0.3, -0.8, 1.1)", rel(20 * (A * A + tail), brute),
                   rel(20 * (std::pow(A, 5) + tail), brute)});
  }
  return out;
}

std::string errata_table(const std::vector<ErratumCheck>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += fmt::format("[{}]\n", e.location);
    out += fmt::format("  printed:   {}\n", e.printed);
    out += fmt::format("  corrected: {}\n", e.corrected);
    out += fmt::format("  evidence:  {}\n", e.evidence);
    out += fmt::format("  printed residual {:.3e} ({}), corrected residual {:.3e} ({})\n", e.printed_residual,
                       e.printed_fails() ? "fails as printed" : "UNEXPECTEDLY PASSES", e.corrected_residual,
                       e.corrected_passes() ? "corrected form verified" : "CORRECTED FORM FAILS");
  }
  return out;
}

}  // namespace cyclic::app
