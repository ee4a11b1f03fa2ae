#include "shortbasis/error.hpp"

namespace shortbasis {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kNotASquare: return "NotASquare";
    case ErrorCode::kDegenerateOrder: return "DegenerateOrder";
    case ErrorCode::kNotIncluded: return "NotIncluded";
    case ErrorCode::kParityError: return "ParityError";
    case ErrorCode::kNoSolution: return "NoSolution";
    case ErrorCode::kDegenerateInclusion: return "DegenerateInclusion";
    case ErrorCode::kWeilViolation: return "WeilViolation";
    case ErrorCode::kDegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::kNonPositiveArg: return "NonPositiveArg";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kNoSuperlattice: return "NoSuperlattice";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kSingularCurve: return "SingularCurve";
    case ErrorCode::kNoIsomorphism: return "NoIsomorphism";
    case ErrorCode::kBadKernel: return "BadKernel";
    case ErrorCode::kConstantMissing: return "ConstantMissing";
    case ErrorCode::kSupersingular: return "Supersingular";
    case ErrorCode::kNoRoot: return "NoRoot";
    case ErrorCode::kInconsistentEigenvalue: return "InconsistentEigenvalue";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace shortbasis
