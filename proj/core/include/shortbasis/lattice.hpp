#pragma once

// Exact lattice algebra on row bases: membership in the kernel lattice of a
// decomposition map, determinants, Hermite normal form, 2-dimensional Gauss
// reduction, Babai rounding and index reduction ("shrinking") of
// sublattice bases.

#include <cstddef>
#include <optional>
#include <span>

#include "shortbasis/basis.hpp"

namespace shortbasis {

// True iff v_1 + sum_{i>=2} v_i*l_i = 0 (mod N).
bool membership(std::span<const Int> v, const DecompositionProblem& problem);
bool rows_in_lattice(const Basis& basis, const DecompositionProblem& problem);

Int basis_det(const Basis& basis);

// Row-style Hermite normal form with pivots on the diagonal: row i is zero
// beyond column i, pivots are positive, and every entry below a pivot is
// reduced into [0, pivot). The lattice {(z_1..z_r) : z_1 + sum z_i l_i = 0 mod N}
// therefore has HNF rows (N, 0, ...), (-l_2 mod N, 1, 0, ...), ...
Basis hnf(const Basis& basis);
bool same_lattice(const Basis& a, const Basis& b);

// Lagrange-Gauss reduction under the Euclidean norm (2-dimensional only).
Basis gauss_reduce(const Basis& basis);

// (m, 0, ..., 0) - sum round(alpha_i) b_i where alpha solves
// (m, 0, ..., 0) = sum alpha_i b_i exactly (Cramer's rule).
Decomposition babai_decompose(const Basis& basis, const DecompositionProblem& problem,
                              const Int& m);

// Divide both rows by g = gcd(b_1) when g divides b_2 and the scaled rows
// stay in the lattice; otherwise return the input.
Basis shrink_gcd(const Basis& basis, const DecompositionProblem& problem);

// The three-case rule for removing 2-torsion index from a basis of the form
// ((b-1, c), (c*n + (b-1)*t, 1-b)). Returns nullopt when the chosen
// candidate is not integral or leaves the lattice.
std::optional<Basis> shrink_two_torsion(const Basis& basis,
                                        const DecompositionProblem& problem);

// Superlattice of index ell found by testing the ell+1 candidates
// b_2/ell, b_1/ell and (b_1 + i*b_2)/ell for 0 < i < ell. The mixed
// candidates are only searched for ell < 2^24 (kTooLarge beyond).
Basis shrink_prime_search(const Basis& basis, const Int& ell,
                          const DecompositionProblem& problem);

// shrink_two_torsion when ell = 2 and it succeeds (this may drop index 4 at
// once), otherwise shrink_prime_search. Requires ell | |det|/N.
Basis shrink_prime(const Basis& basis, const Int& ell, const DecompositionProblem& problem);

// Repeated shrink_gcd/shrink_prime until |det| = N.
Basis shrink_to_fit(const Basis& basis, const DecompositionProblem& problem);

// Bitlength of the largest absolute entry; 0 for the zero matrix.
std::size_t norm_bits(const Basis& basis);

}  // namespace shortbasis
