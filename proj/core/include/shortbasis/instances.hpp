#pragma once

// Random concrete instances for every scheme: the ready-made basis together
// with a decomposition problem (N, eigenvalues) that its rows belong to.
// Curve-backed instances also carry the curve, a point of order N and the
// endomorphisms whose eigenvalues were resolved on that point.

#include <optional>
#include <random>
#include <vector>

#include "shortbasis/basis_builders.hpp"
#include "shortbasis/curve.hpp"

namespace shortbasis {

struct LatticeInstance {
  SchemeDescriptor scheme;
  Basis basis;
  DecompositionProblem problem;
  // |det| of the ready-made basis; N divides it.
  Int group_order;
  // The endomorphism fed to the bound formulas: phi for GLV, GI and genus 2,
  // psi (degree p resp. d*p) for GLS and Q-curves.
  QuadraticGenerator phi;
};

struct CurveBackedInstance {
  LatticeInstance lattice;
  CurveInstance curve;
  Point point;  // of order N
  Int cofactor;
  std::vector<Endomorphism> endos;  // one per non-trivial eigenvalue
};

// Largest prime factor N of n with N >= 3 and N not dividing `avoid`;
// nullopt when there is none. Beyond 64 bits n must be a 2^16-smooth number
// times at most one larger prime, otherwise nullopt.
std::optional<Int> admissible_modulus(const Int& n, const Int& avoid = 1);

// (lambda_phi, lambda_psi, lambda_phi*lambda_psi) mod the prime N, where
// lambda_phi is a root of chi_phi and lambda_psi = c*lambda_phi + b squares
// to sd. These are the eigenvalues of the GI basis (sd = sign*d) and of the
// GLV+GLS basis (sd = -1). nullopt when no root qualifies.
std::optional<std::vector<Int>> four_dim_eigenvalues(const Int& b, const Int& c,
                                                     const QuadraticGenerator& phi,
                                                     const Int& sd, const Int& N);

// Arithmetic draws with p (or q) a random prime of the given bitlength.
LatticeInstance random_gls_lattice(std::mt19937_64& rng, unsigned bits);
LatticeInstance random_qcurve_lattice(std::mt19937_64& rng, unsigned bits);
LatticeInstance random_gi_lattice(std::mt19937_64& rng, unsigned bits);
LatticeInstance random_g2rm_lattice(std::mt19937_64& rng, unsigned bits);

// GLS on the twist of `base` (over F_p); N is the largest odd prime factor
// of #E' (split as for admissible_modulus) and nullopt is returned when
// there is none or N^2 divides #E'.
std::optional<CurveBackedInstance> gls_curve_instance(const CurveInstance& base,
                                                      std::mt19937_64& rng);

// GLV on a catalog curve over F_p with (b, c) recovered from the curve.
// Same cofactor rule as above. Throws kConstantMissing when the catalog
// entry does not exist over F_p.
std::optional<CurveBackedInstance> glv_curve_instance(std::string_view curve_id, const Int& p,
                                                      std::mt19937_64& rng,
                                                      const Int& a = 1);

// Four-dimensional GLV+GLS on the twist of y^2 = x^3 + a*x over F_{p^2},
// p = 1 (mod 4). The sign of c is chosen so that lambda_psi = c*lambda_phi + b.
std::optional<CurveBackedInstance> glvgls_curve_instance(const Int& p, const Int& a,
                                                         std::mt19937_64& rng);

}  // namespace shortbasis
