#pragma once

// Misprinted formulas and their corrections, each re-checked against a
// brute-force evaluation when listed.

#include <string>
#include <vector>

namespace cyclic::app {

struct ErratumCheck {
  std::string location;
  std::string printed;
  std::string corrected;
  std::string evidence;     ///< what the two forms were compared against
  double printed_residual;  ///< relative
  double corrected_residual;

  bool printed_fails() const { return printed_residual > kPrintedFailThreshold; }
  bool corrected_passes() const { return corrected_residual < kCorrectedPassThreshold; }

  static constexpr double kPrintedFailThreshold = 1e-3;
  static constexpr double kCorrectedPassThreshold = 1e-9;
};

std::vector<ErratumCheck> check_errata();

/// Plain-text table of check_errata().
std::string errata_table(const std::vector<ErratumCheck>& entries);

}  // namespace cyclic::app
