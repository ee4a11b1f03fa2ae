#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shortbasis/exact_arith.hpp"

namespace shortbasis {

// Square integer matrix whose rows are lattice vectors, tagged with the
// construction that produced it.
struct Basis {
  IntMatrix rows;
  std::string scheme;

  Basis() = default;
  Basis(IntMatrix m, std::string tag);

  std::size_t dimension() const { return rows.rows(); }
  std::vector<Int> row(std::size_t i) const { return rows.row_vector(i); }

  friend bool operator==(const Basis& a, const Basis& b) { return a.rows == b.rows; }
};

// The decomposition map (a_1, ..., a_r) -> a_1 + a_2*l_2 + ... + a_r*l_r mod N.
// The first eigenvalue is the implicit 1 of the identity endomorphism.
class DecompositionProblem {
 public:
  DecompositionProblem(Int modulus, std::vector<Int> eigenvalues);

  const Int& modulus() const { return modulus_; }
  // l_2, ..., l_r, each reduced into [0, N).
  const std::vector<Int>& eigenvalues() const { return eigenvalues_; }
  std::size_t dimension() const { return eigenvalues_.size() + 1; }

  // a_1 + sum a_i*l_i mod N, in [0, N).
  Int evaluate(std::span<const Int> coefficients) const;

 private:
  Int modulus_;
  std::vector<Int> eigenvalues_;
};

struct Decomposition {
  std::vector<Int> coefficients;

  Int max_abs() const;
  std::size_t max_bits() const { return bit_length(max_abs()); }
};

}  // namespace shortbasis
