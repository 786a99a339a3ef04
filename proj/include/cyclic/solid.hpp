#pragma once

// Power sums of distances to the vertices of the Platonic solids, their
// vertex-by-vertex oracle, sphere loci, and the relations among the averages.
// Everything works on R^2 and L^2 so exact backends never need sqrt(3).

#include <string>
#include <vector>

#include "cyclic/polygon.hpp"

namespace cyclic {

inline void check_solid_power(SolidKind kind, int m) {
  if (m < 1 || m > max_power_index(kind)) {
    throw DomainError(ErrorCode::OutOfRange, "power index m=" + std::to_string(m) + " outside 1.." +
                                                 std::to_string(max_power_index(kind)) + " for the " +
                                                 std::string(solid_name(kind)) + "; the sum depends on direction there");
  }
}

/// Average S^(2m) shared by every solid whose range includes m, with
/// A = R^2 + L^2 and P = R^2 L^2:
///   S2 = A, S4 = A^2 + 4/3 P, S6 = A^3 + 4PA,
///   S8 = A^4 + 8PA^2 + 16/5 P^2, S10 = A^5 + 40/3 PA^3 + 16P^2 A.
template <Scalar F>
F solid_average_sq(int m, const F& R_sq, const F& L_sq) {
  const F A = R_sq + L_sq;
  const F P = R_sq * L_sq;
  switch (m) {
    case 1: return A;
    case 2: return A * A + F(4) / F(3) * P;
    case 3: return A * A * A + F(4) * P * A;
    case 4: return pow_int(A, 4) + F(8) * P * A * A + F(16) / F(5) * P * P;
    case 5: return pow_int(A, 5) + F(40) / F(3) * P * pow_int(A, 3) + F(16) * P * P * A;
    default: throw DomainError(ErrorCode::OutOfRange, "no solid has a closed form for m=" + std::to_string(m));
  }
}

template <Scalar F>
F solid_power_sum_closed_sq(const SolidSpec<F>& spec, int m, const F& L_sq) {
  check_solid_power(spec.kind, m);
  if (L_sq < F(0)) throw DomainError(ErrorCode::InvalidSpec, "L^2 must be >= 0");
  return F(spec.n()) * solid_average_sq(m, spec.R_sq, L_sq);
}

template <Scalar F>
F solid_power_sum_closed(const SolidSpec<F>& spec, int m, const F& L) {
  if (L < F(0)) throw DomainError(ErrorCode::InvalidSpec, "placement distance L must be >= 0");
  return solid_power_sum_closed_sq(spec, m, L * L);
}

template <Scalar F>
CyclicAverage<F> solid_cyclic_average(const SolidSpec<F>& spec, int m, const F& L_sq) {
  return {m, solid_power_sum_closed_sq(spec, m, L_sq) / F(spec.n()), spec};
}

/// Sum of d_i^(2m) over the vertices at a concrete placement; any m >= 1.
template <Scalar F>
F solid_power_sum_brute(const SolidSpec<F>& spec, int m, const SpacePlacement<F>& p) {
  if (m < 1) throw DomainError(ErrorCode::OutOfRange, "power index m must be >= 1");
  return sum_of_powers(solid_distances(spec, p), static_cast<unsigned>(m));
}

template <Scalar F>
LocusClass solid_locus_classify(const SolidSpec<F>& spec, int m, const F& C) {
  check_solid_power(spec.kind, m);
  const F centroid_value = F(spec.n()) * pow_int(spec.R_sq, static_cast<unsigned>(m));
  const double r2 = to_double(spec.R_sq);
  const int n = spec.n();
  return classify_against_centroid<F>(
      C, centroid_value, true, [=](double l2) { return n * solid_average_sq<double>(m, r2, l2); }, r2);
}

/// {R^2, L^2} as (S2 +/- sqrt(4 S2^2 - 3 S4)) / 2.
template <Scalar F>
BranchPair<F> recover_r2_l2_solid(const F& S2, const F& S4) {
  if (!(S2 > F(0))) throw DomainError(ErrorCode::InvalidAverage, "S2 must be positive");
  const F disc = detail::snap_nonnegative(F(4) * S2 * S2 - F(3) * S4, S2 * S2);
  if (disc < F(0)) {
    throw DomainError(ErrorCode::NegativeDiscriminant,
                      "4*S2^2 - 3*S4 = " + format_scalar(disc) + " < 0; the averages are inconsistent");
  }
  const F s = scalar_sqrt(disc);
  return {(S2 + s) / F(2), (S2 - s) / F(2)};
}

/// 4 (sum d^2)^2 - 3n sum d^4; zero exactly on the circumsphere.
template <Scalar F>
F circumsphere_check(const DistanceMultiset<F>& d) {
  const F s2 = sum_of_powers(d, 1);
  const F s4 = sum_of_powers(d, 2);
  return F(4) * s2 * s2 - F(3 * d.size()) * s4;
}

/// Relations among the averages S = (S2, S4, S6, S8, S10). Only entries up to
/// the kind's range are read; relations needing more are skipped.
template <Scalar F>
std::vector<Residual<F>> solid_relation_residuals(SolidKind kind, const std::vector<F>& S, const F& R_sq) {
  const int top = max_power_index(kind);
  if (static_cast<int>(S.size()) < top) {
    throw DomainError(ErrorCode::InvalidSpec, "need " + std::to_string(top) + " averages for the " +
                                                  std::string(solid_name(kind)));
  }
  const F R4 = R_sq * R_sq;
  const F& S2 = S[0];
  const F& S4 = S[1];
  const F L_sq = S2 - R_sq;
  const F shifted = S2 + F(2) / F(3) * R_sq;
  std::vector<Residual<F>> out{
      {"S4 + 16/9 R^4 = (S2 + 2/3 R^2)^2", S4 + F(16) / F(9) * R4 - shifted * shifted},
      {"4S2^2 - 3S4 = (R^2 - L^2)^2", F(4) * S2 * S2 - F(3) * S4 - (R_sq - L_sq) * (R_sq - L_sq)},
  };
  if (top >= 3) {
    const F& S6 = S[2];
    const F t = S2 + F(2) * R_sq;
    out.push_back({"S6 = S2((S2 + 2R^2)^2 - 8R^4)", S6 - S2 * (t * t - F(8) * R4)});
    out.push_back({"S6 = S2(3S4 - 2S2^2)", S6 - S2 * (F(3) * S4 - F(2) * S2 * S2)});
  }
  if (top >= 5) {
    const F& S8 = S[3];
    const F& S10 = S[4];
    const F S2_2 = S2 * S2;
    const F gap = S2 - R_sq;
    out.push_back({"S8 - S2^4 = 8R^2(S2 - R^2)(S2^2 + 2/5 R^2(S2 - R^2))",
                   S8 - S2_2 * S2_2 - F(8) * R_sq * gap * (S2_2 + F(2) / F(5) * R_sq * gap)});
    out.push_back({"S10 - S2^5 = 8R^2 S2(S2 - R^2)(5/3 S2^2 + 2R^2(S2 - R^2))",
                   S10 - S2_2 * S2_2 * S2 - F(8) * R_sq * S2 * gap * (F(5) / F(3) * S2_2 + F(2) * R_sq * gap)});
    out.push_back({"S8 = (9S4^2 + 12S4 S2^2 - 16S2^4) / 5",
                   S8 - (F(9) * S4 * S4 + F(12) * S4 * S2_2 - F(16) * S2_2 * S2_2) / F(5)});
    out.push_back({"S10 = S2 S4(9S4 - 8S2^2)", S10 - S2 * S4 * (F(9) * S4 - F(8) * S2_2)});
  }
  return out;
}

/// The cube's vertices split into two regular tetrahedra (odd and even
/// indices). For each quadruple, the d^2 and d^4 sums minus the tetrahedron
/// closed values 4A and 4(A^2 + 4/3 R^2 L^2). Accepts the cube's 8 distances
/// or the dodecahedron's 20 (whose first 8 vertices are the cube).
template <Scalar F>
std::vector<Residual<F>> cube_quadruple_residuals(const DistanceMultiset<F>& d, const F& R_sq, const F& L_sq) {
  if (d.size() != 8 && d.size() != 20) {
    throw DomainError(ErrorCode::InvalidSpec, "cube quadruples need 8 or 20 distances, got " + std::to_string(d.size()));
  }
  std::vector<Residual<F>> out;
  for (int parity = 1; parity <= 2; ++parity) {
    const std::string label = parity == 1 ? "odd" : "even";
    for (int m = 1; m <= 2; ++m) {
      F sum(0);
      for (int i = parity; i <= 8; i += 2) sum = sum + pow_int(d(i), static_cast<unsigned>(m));
      out.push_back({label + " quadruple, power " + std::to_string(2 * m), sum - F(4) * solid_average_sq(m, R_sq, L_sq)});
    }
  }
  return out;
}

/// d_(2j-1)^2 + d_(2j)^2 over the antipodal pairs; all equal 2(R^2 + L^2).
template <Scalar F>
std::vector<F> pair_residuals_solid(SolidKind kind, const DistanceMultiset<F>& d) {
  if (kind == SolidKind::Tetrahedron) {
    throw DomainError(ErrorCode::TetrahedronHasNoAntipodes, "the tetrahedron has no antipodal vertex pairs");
  }
  if (d.size() != vertex_count(kind)) {
    throw DomainError(ErrorCode::InvalidSpec, "expected " + std::to_string(vertex_count(kind)) + " distances");
  }
  std::vector<F> out;
  for (int j = 1; 2 * j <= d.size(); ++j) out.push_back(d(2 * j - 1) + d(2 * j));
  return out;
}

}  // namespace cyclic
