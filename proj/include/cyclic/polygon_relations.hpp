#pragma once

// Identities and solvers for particular n: the symmetric triangle and square
// identities, distance solvers for n = 3, 4, 6, recovery of (R^2, L^2) from
// distances, and sums over opposite pairs and regular sub-polygons.

#include <array>
#include <string>
#include <vector>

#include "cyclic/polygon.hpp"

namespace cyclic {

/// 3(d1^4 + d2^4 + d3^4 + a^4) - (d1^2 + d2^2 + d3^2 + a^2)^2, side given as a^2.
template <Scalar F>
F triangle_symmetric_residual(const DistanceMultiset<F>& d, const F& a_sq) {
  if (d.size() != 3) throw DomainError(ErrorCode::InvalidSpec, "triangle identity needs 3 distances");
  const F s2 = sum_of_powers(d, 1) + a_sq;
  return F(3) * (sum_of_powers(d, 2) + a_sq * a_sq) - s2 * s2;
}

/// 4(d1^4 + ... + d4^4 + 3a^4) - (d1^2 + ... + d4^2 + 2a^2)^2, side given as a^2.
template <Scalar F>
F square_symmetric_residual(const DistanceMultiset<F>& d, const F& a_sq) {
  if (d.size() != 4) throw DomainError(ErrorCode::InvalidSpec, "square identity needs 4 distances");
  const F s2 = sum_of_powers(d, 1) + F(2) * a_sq;
  return F(4) * (sum_of_powers(d, 2) + F(3) * a_sq * a_sq) - s2 * s2;
}

/// The two mirror-image distance systems. In `plus`, d_2^2 takes the + sign;
/// that is the placement with sin(alpha) <= 0 (M closer to A_n than to A_2).
template <Scalar F>
struct DistanceBranches {
  DistanceMultiset<F> plus;
  DistanceMultiset<F> minus;

  /// The branch realised by a placement whose sin(alpha) has the given sign.
  const DistanceMultiset<F>& for_sin_alpha(double sin_alpha) const { return sin_alpha > 0.0 ? minus : plus; }
};

inline void check_solver_n(int n) {
  if (n != 3 && n != 4 && n != 6) {
    throw DomainError(ErrorCode::InvalidSpec, "distance solvers exist for n = 3, 4, 6 only, got " + std::to_string(n));
  }
}

/// All n squared distances from R, L and d_1^2.
template <Scalar F>
DistanceBranches<F> solve_distances(int n, const F& R, const F& L, const F& d1_sq) {
  check_solver_n(n);
  const F R_sq = R * R;
  const F L_sq = L * L;
  const F A = R_sq + L_sq;
  const F h = detail::snap_nonnegative(heron_area_16sq(R_sq, L_sq, d1_sq), A * A);
  if (h < F(0)) {
    throw DomainError(ErrorCode::Unattainable,
                      "d1^2 = " + format_scalar(d1_sq) + " is outside [(R-L)^2, (R+L)^2]");
  }
  auto build = [&](const F& s) -> std::vector<F> {
    switch (n) {
      case 3: return {d1_sq, (F(3) * A - d1_sq + s) / F(2), (F(3) * A - d1_sq - s) / F(2)};
      case 4: return {d1_sq, A + s, F(2) * A - d1_sq, A - s};
      default:
        return {d1_sq,
                (A + d1_sq + s) / F(2),
                (F(3) * A - d1_sq + s) / F(2),
                F(2) * A - d1_sq,
                (F(3) * A - d1_sq - s) / F(2),
                (A + d1_sq - s) / F(2)};
    }
  };
  auto clamp = [](std::vector<F> v) {
    if constexpr (!is_exact_v<F>) {
      for (F& x : v) x = x < F(0) ? F(0) : x;
    }
    return DistanceMultiset<F>(std::move(v));
  };
  // n = 4 uses 4*area, n = 3 and 6 use 4*sqrt(3)*area.
  const F s = scalar_sqrt(n == 4 ? h : F(3) * h);
  return {clamp(build(s)), clamp(build(-s))};
}

/// Candidate (R^2, L^2) pairs: plus.R_sq goes with plus.L_sq.
template <Scalar F>
struct RecoveredSpec {
  BranchPair<F> R_sq;
  BranchPair<F> L_sq;
};

namespace detail {

template <Scalar F>
bool close_enough(const F& a, const F& b, const F& scale) {
  if constexpr (is_exact_v<F>) {
    return a == b;
  } else {
    return abs_value(a - b) <= F(1e-9) * (abs_value(scale) + F(1e-300));
  }
}

template <Scalar F>
BranchPair<F> recover_window(const F& sum_sq, const F& area_term, const F& denom, const F& scale) {
  const F h = snap_nonnegative(area_term, scale * scale);
  if (h < F(0)) {
    throw DomainError(ErrorCode::InconsistentDistances,
                      "triangle area term " + format_scalar(h) + " is negative; no regular polygon fits");
  }
  const F s = scalar_sqrt(h);
  return {(sum_sq + s) / denom, (sum_sq - s) / denom};
}

}  // namespace detail

template <Scalar F>
RecoveredSpec<F> recover_spec_from_distances(int n, const DistanceMultiset<F>& d) {
  check_solver_n(n);
  if (d.size() != n) {
    throw DomainError(ErrorCode::InvalidSpec,
                      "expected " + std::to_string(n) + " distances, got " + std::to_string(d.size()));
  }
  const F S2 = sum_of_powers(d, 1) / F(n);
  BranchPair<F> r2{F(0), F(0)};
  if (n == 3) {
    const F sum = d(1) + d(2) + d(3);
    r2 = detail::recover_window(sum, F(3) * heron_area_16sq(d(1), d(2), d(3)), F(6), sum);
  } else if (n == 4) {
    const F w1 = d(1) + d(3);
    const F w2 = d(2) + d(4);
    if (!detail::close_enough(w1, w2, w1)) {
      throw DomainError(ErrorCode::InconsistentDistances, "opposite pairs have different sums of squares");
    }
    r2 = detail::recover_window(w1, heron_area_16sq(d(1), F(2) * d(2), d(3)), F(4), w1);
    const auto other = detail::recover_window(w2, heron_area_16sq(d(2), F(2) * d(3), d(4)), F(4), w2);
    if (!detail::close_enough(r2.plus, other.plus, w1) || !detail::close_enough(r2.minus, other.minus, w1)) {
      throw DomainError(ErrorCode::InconsistentDistances, "the two index windows disagree on R^2");
    }
  } else {
    const F odd = d(1) + d(3) + d(5);
    const F even = d(2) + d(4) + d(6);
    r2 = detail::recover_window(odd, F(3) * heron_area_16sq(d(1), d(3), d(5)), F(6), odd);
    const auto other = detail::recover_window(even, F(3) * heron_area_16sq(d(2), d(4), d(6)), F(6), even);
    if (!detail::close_enough(r2.plus, other.plus, odd) || !detail::close_enough(r2.minus, other.minus, odd)) {
      throw DomainError(ErrorCode::InconsistentDistances, "odd and even vertices disagree on R^2");
    }
  }
  return {r2, {S2 - r2.plus, S2 - r2.minus}};
}

/// d_i^2 + d_(i+k)^2 for i = 1..k where n = 2k; all equal 2(R^2 + L^2).
template <Scalar F>
std::vector<F> opposite_pair_residuals(const DistanceMultiset<F>& d) {
  const int n = d.size();
  if (n % 2 != 0) throw DomainError(ErrorCode::OddN, "opposite pairs need an even vertex count, got " + std::to_string(n));
  const int k = n / 2;
  std::vector<F> out;
  for (int i = 1; i <= k; ++i) out.push_back(d(i) + d(i + k));
  return out;
}

struct SubsetIdentitySpec {
  int n;
  int divisor;    ///< vertices per subset: 2, 3, 4 or 5
  int parameter;  ///< subset stride; divisor * parameter = n

  SubsetIdentitySpec(int vertices, int div, int param) : n(vertices), divisor(div), parameter(param) {
    if (divisor < 2 || divisor > 5 || parameter < 1 || divisor * parameter != n) {
      throw DomainError(ErrorCode::DivisorMismatch, "subset identity needs divisor in 2..5 with divisor * parameter = n (" +
                                                        std::to_string(divisor) + " * " + std::to_string(parameter) +
                                                        " vs " + std::to_string(n) + ")");
    }
  }
};

/// Powers m (for sums of d^(2m)) checked over each subset.
inline std::vector<int> subset_powers(int divisor) {
  switch (divisor) {
    case 2: return {1};
    case 3: return {1, 2};
    case 4: return {1, 2, 3};
    default: return {1, 2, 3, 4};
  }
}

/// For each subset {j, j+p, j+2p, ...} (a regular divisor-gon) and each checked
/// power, the subset sum minus its closed value. For divisor 4 the opposite
/// pairs inside each quadruple are checked as well.
template <Scalar F>
std::vector<Residual<F>> subset_identity_residuals(const SubsetIdentitySpec& spec, const DistanceMultiset<F>& d,
                                                   const F& R, const F& L) {
  if (d.size() != spec.n) {
    throw DomainError(ErrorCode::DivisorMismatch,
                      "expected " + std::to_string(spec.n) + " distances, got " + std::to_string(d.size()));
  }
  const F R_sq = R * R;
  const F L_sq = L * L;
  std::vector<Residual<F>> out;
  for (int j = 1; j <= spec.parameter; ++j) {
    for (int m : subset_powers(spec.divisor)) {
      F sum(0);
      for (int t = 0; t < spec.divisor; ++t) sum = sum + pow_int(d(j + t * spec.parameter), static_cast<unsigned>(m));
      const F closed = F(spec.divisor) * polygon_bracket_sq(m, R_sq, L_sq);
      out.push_back({"subset " + std::to_string(j) + " of " + std::to_string(spec.divisor) + ", power " +
                         std::to_string(2 * m),
                     sum - closed});
    }
    if (spec.divisor == 4) {
      const F two_a = F(2) * (R_sq + L_sq);
      out.push_back({"subset " + std::to_string(j) + " pair 1", d(j) + d(j + 2 * spec.parameter) - two_a});
      out.push_back({"subset " + std::to_string(j) + " pair 2",
                     d(j + spec.parameter) + d(j + 3 * spec.parameter) - two_a});
    }
  }
  return out;
}

/// 3 (d1+d2-d3-d4)(d1+d3-d2-d4)(d1+d4-d2-d3) on squared distances.
template <Scalar F>
F square_sixth_factorization_residual(const DistanceMultiset<F>& d) {
  if (d.size() != 4) throw DomainError(ErrorCode::InvalidSpec, "square factorization needs 4 distances");
  return F(3) * (d(1) + d(2) - d(3) - d(4)) * (d(1) + d(3) - d(2) - d(4)) * (d(1) + d(4) - d(2) - d(3));
}

/// Relations among polygon averages that involve R:
///   S4 + 3R^4 = (S2 + R^2)^2
///   S6 = S2((S2 + 3R^2)^2 - 15R^4)
///   S6 = S2(3 S4 - 2 S2^2)
///   3 S2^2 - 2 S4 = (R^2 - L^2)^2 with L^2 = S2 - R^2
template <Scalar F>
std::vector<Residual<F>> polygon_average_relation_residuals(const F& S2, const F& S4, const F& S6, const F& R_sq) {
  const F R4 = R_sq * R_sq;
  const F L_sq = S2 - R_sq;
  const F t = S2 + F(3) * R_sq;
  return {
      {"S4 + 3R^4 = (S2 + R^2)^2", S4 + F(3) * R4 - (S2 + R_sq) * (S2 + R_sq)},
      {"S6 = S2((S2 + 3R^2)^2 - 15R^4)", S6 - S2 * (t * t - F(15) * R4)},
      {"S6 = S2(3S4 - 2S2^2)", S6 - S2 * (F(3) * S4 - F(2) * S2 * S2)},
      {"3S2^2 - 2S4 = (R^2 - L^2)^2", F(3) * S2 * S2 - F(2) * S4 - (R_sq - L_sq) * (R_sq - L_sq)},
  };
}

}  // namespace cyclic
