#include "shortbasis/basis.hpp"

#include <algorithm>

#include "shortbasis/error.hpp"

namespace shortbasis {

Basis::Basis(IntMatrix m, std::string tag) : rows(std::move(m)), scheme(std::move(tag)) {
  if (!rows.is_square()) {
    throw MathError(ErrorCode::kDimensionMismatch, "basis matrix must be square");
  }
}

DecompositionProblem::DecompositionProblem(Int modulus, std::vector<Int> eigenvalues)
    : modulus_(std::move(modulus)), eigenvalues_(std::move(eigenvalues)) {
  if (modulus_ <= 1) {
    throw MathError(ErrorCode::kInvalidArgument, "modulus must exceed 1");
  }
  for (Int& l : eigenvalues_) l = floor_mod(l, modulus_);
}

Int DecompositionProblem::evaluate(std::span<const Int> coefficients) const {
  if (coefficients.size() != dimension()) {
    throw MathError(ErrorCode::kDimensionMismatch,
                    "vector of length " + std::to_string(coefficients.size()) +
                        " for a " + std::to_string(dimension()) + "-dimensional problem");
  }
  Int acc = coefficients[0];
  for (std::size_t i = 1; i < coefficients.size(); ++i) {
    acc += coefficients[i] * eigenvalues_[i - 1];
  }
  return floor_mod(acc, modulus_);
}

Int Decomposition::max_abs() const {
  Int best = 0;
  for (const Int& a : coefficients) best = std::max(best, abs(a));
  return best;
}

}  // namespace shortbasis
