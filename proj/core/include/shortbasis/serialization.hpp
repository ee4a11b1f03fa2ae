#pragma once

// Basis documents as JSON. Every integer is a decimal string so values of any
// size survive tools that parse JSON numbers as doubles. Field order is fixed:
//   {"scheme", "r", "modulus", "eigenvalues", "rows"}

#include <optional>
#include <string>
#include <string_view>

#include "shortbasis/basis.hpp"

namespace shortbasis {

struct BasisDocument {
  Basis basis;
  // Present when the document carries a modulus.
  std::optional<DecompositionProblem> problem;
};

// Pretty-printed with the given indent; indent < 0 gives a single line.
std::string basis_to_json(const Basis& basis,
                          const std::optional<DecompositionProblem>& problem = std::nullopt,
                          int indent = 2);

// Throws kInvalidArgument on malformed documents (wrong shapes, non-string
// integers, r inconsistent with the rows).
BasisDocument parse_basis_json(std::string_view text);

}  // namespace shortbasis
