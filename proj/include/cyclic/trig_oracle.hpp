#pragma once

// Direct-summation trigonometric sums. These are the independent oracles for
// the closed forms in the polygon engine, so they never call into it.

#include <utility>
#include <vector>

#include "cyclic/scalar.hpp"

namespace cyclic {

struct TrigSumSpec {
  int n;
  int m;
  double alpha;

  TrigSumSpec(int vertices, int power, double angle);
};

/// sum_{k=1}^{n} cos(m (alpha - (k-1) 2pi/n))
double multiple_angle_cosine_sum(const TrigSumSpec& s);

/// sum_{k=1}^{n} cos^m(alpha - (k-1) 2pi/n)
double cosine_power_sum(const TrigSumSpec& s);

/// The value cosine_power_sum takes whenever m < n: 0 for odd m,
/// n * C(m, m/2) / 2^m for even m.
Rational cosine_power_sum_closed(int n, int m);

struct HarmonicTerm {
  int harmonic;  ///< multiple j in cos(j theta); 0 is the constant term
  Rational coefficient;
};

/// cos^m(theta) = sum coefficient * cos(harmonic * theta), harmonics m, m-2, ..., (1 or 0).
std::vector<HarmonicTerm> power_reduction_coefficients(int m);

}  // namespace cyclic
