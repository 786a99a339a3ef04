#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclic {

enum class ErrorCode {
  InvalidSpec,
  IndexOutOfRange,
  OutOfRange,
  NegativeDiscriminant,
  InvalidAverage,
  Unattainable,
  InconsistentDistances,
  OddN,
  DivisorMismatch,
  TetrahedronHasNoAntipodes,
  DegenerateQuartic,
  NotSquarefree,
  NoCertificateFound,
  NonRationalInput,
  NotRepresentable,
};

std::string_view to_string(ErrorCode code);

/// Raised when inputs are well formed but violate a mathematical precondition.
/// The CLI maps these to exit status 2.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cyclic
