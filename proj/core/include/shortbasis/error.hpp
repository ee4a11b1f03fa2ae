#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shortbasis {

enum class ErrorCode {
  kNotInvertible,
  kNotASquare,
  kDegenerateOrder,
  kNotIncluded,
  kParityError,
  kNoSolution,
  kDegenerateInclusion,
  kWeilViolation,
  kDegenerateConfiguration,
  kNonPositiveArg,
  kDimensionMismatch,
  kRankDeficient,
  kNoSuperlattice,
  kTooLarge,
  kSingularCurve,
  kNoIsomorphism,
  kBadKernel,
  kConstantMissing,
  kSupersingular,
  kNoRoot,
  kInconsistentEigenvalue,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Single exception type for every library failure; callers dispatch on code().
class MathError : public std::runtime_error {
 public:
  MathError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace shortbasis
