#pragma once

// Seeded sweeps over every identity, grouped by scope.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cyclic::app {

enum class VerifyScope { All, Polygon, Solid, Rational };

std::optional<VerifyScope> parse_scope(std::string_view text);
std::string_view scope_name(VerifyScope scope);

inline constexpr std::uint64_t kDefaultSeed = 7;

struct CheckResult {
  std::string group;
  std::string name;
  long samples = 0;
  long failures = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string note;

  bool passed() const { return failures == 0 && samples > 0; }
};

std::vector<CheckResult> run_verify(VerifyScope scope, std::uint64_t seed);

std::string verify_table(VerifyScope scope, std::uint64_t seed, const std::vector<CheckResult>& results);

}  // namespace cyclic::app
