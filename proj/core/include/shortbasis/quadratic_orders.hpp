#pragma once

#include <array>
#include <utility>
#include <vector>

#include "shortbasis/exact_arith.hpp"

namespace shortbasis {

// A non-integer element of a quadratic ring, known through its minimal
// polynomial T^2 - trace*T + norm.
struct QuadraticGenerator {
  Int trace;
  Int norm;

  friend bool operator==(const QuadraticGenerator&, const QuadraticGenerator&) = default;
};

// sub = c*sup + b, for generators sub and sup with Z[sub] inside Z[sup].
struct OrderInclusion {
  Int b;
  Int c;

  friend bool operator==(const OrderInclusion&, const OrderInclusion&) = default;
};

// Coefficients of an eigenvalue relation
//   k_one + k_sup*lambda_sup + k_sub*lambda_sub + k_both*lambda_sub*lambda_sup = 0 (mod N).
struct RelationRow {
  Int k_one;
  Int k_sup;
  Int k_sub;
  Int k_both;

  friend bool operator==(const RelationRow&, const RelationRow&) = default;

  Int evaluate(const Int& lambda_sup, const Int& lambda_sub) const {
    return k_one + k_sup * lambda_sup + k_sub * lambda_sub +
           k_both * lambda_sub * lambda_sup;
  }
};

// trace^2 - 4*norm. Throws kDegenerateOrder when the value is 0 (the
// generator is then an integer).
Int discriminant(const QuadraticGenerator& g);

// Value of the minimal polynomial of g at x.
Int evaluate_charpoly(const QuadraticGenerator& g, const Int& x);

// The inclusion sub = c*sup + b with c = +sqrt(disc(sub)/disc(sup)).
// Throws kNotIncluded when the discriminant ratio is not a perfect square
// integer and kParityError when sub.trace - c*sup.trace is odd.
OrderInclusion relation_bc(const QuadraticGenerator& sub, const QuadraticGenerator& sup);

// The conjugate branch (b', -c) of an inclusion.
OrderInclusion conjugate_inclusion(const OrderInclusion& inc,
                                   const QuadraticGenerator& sup);

// Norm and trace of c*sup + b.
QuadraticGenerator image_generator(const OrderInclusion& inc,
                                   const QuadraticGenerator& sup);

// The two eigenvalue relations induced by sub = c*sup + b and by the same
// relation multiplied through by the conjugate of sup.
std::pair<RelationRow, RelationRow> lemma_relations(const OrderInclusion& inc,
                                                    const QuadraticGenerator& sup);

struct TraceConductor {
  Int t;
  Int c;

  friend bool operator==(const TraceConductor&, const TraceConductor&) = default;
  friend bool operator<(const TraceConductor& a, const TraceConductor& b) {
    return a.t != b.t ? a.t < b.t : a.c < b.c;
  }
};

// Every (t, c) with t, c >= 0 and t^2 + |D|*c^2 = 4q, via Cornacchia's
// algorithm run against every square root of D modulo 4q (primitive
// solutions) and modulo q (solutions with gcd 2). Sorted by t descending.
// Throws kNoSolution when the set is empty.
std::vector<TraceConductor> cornacchia_4q(const Int& D, const Int& q);

// (lambda_sub - b) / c mod N in [0, N).
Int transfer_eigenvalue(const OrderInclusion& inc, const Int& lambda_sub, const Int& N);

}  // namespace shortbasis
