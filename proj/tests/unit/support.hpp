#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "cyclic/scalar.hpp"

namespace cyclic::testing {

inline constexpr std::uint64_t kSeed = 20240611;

class Sampler {
 public:
  explicit Sampler(std::uint64_t stream) : gen_(kSeed ^ (stream * 0x9E3779B97F4A7C15ULL)) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  double angle() { return uniform(0.0, 2.0 * M_PI); }
  Rational rational(int max_num, int max_den) { return Rational(integer(1, max_num), integer(1, max_den)); }
  Rational signed_rational(int max_num, int max_den) { return Rational(integer(-max_num, max_num), integer(1, max_den)); }

 private:
  std::mt19937_64 gen_;
};

inline double rel(double a, double b) { return relative_error(a, b); }

}  // namespace cyclic::testing
