#pragma once

// Ready-made short bases for endomorphism decompositions. Every builder is a
// closed-form integer evaluation: no search and no lattice reduction.

#include <string>
#include <utility>
#include <variant>

#include "shortbasis/basis.hpp"
#include "shortbasis/quadratic_orders.hpp"

namespace shortbasis {

// (N, 0, ..., 0), (-l_2, 1, 0, ...), ..., (-l_r, 0, ..., 1).
Basis long_basis(const DecompositionProblem& problem);

// pi = c*phi + b on an elliptic curve with Frobenius eigenvalue 1:
//   (b-1, c), (c*n_phi + (b-1)*t_phi, 1-b).
Basis ec2d_basis(const Int& b, const Int& c, const QuadraticGenerator& phi);

// GLS curve over F_{p^2} from a base curve with Frobenius trace t0:
//   (p-1, -t0), (-t0, 1-p).
Basis gls_basis(const Int& p, const Int& t0);

// Reduction of a degree-d Q-curve, pi = r*psi - eps*p:
//   (-(1 + eps*p), r), (-eps*r*d, 1 + eps*p).
Basis qcurve_basis(const Int& p, const Int& d, int eps, const Int& r_param);
// eps*(d*r^2 - 2p): the Frobenius trace implied by the Q-curve parameters.
Int qcurve_trace(const Int& p, const Int& d, int eps, const Int& r_param);

// Four-dimensional basis for (1, phi, psi, phi*psi) with psi = c*phi + b and
// psi^2 = -1 on the subgroup.
Basis glvgls_basis(const Int& b, const Int& c, const QuadraticGenerator& phi);

// As glvgls_basis but with psi^2 = sign*d on the subgroup.
Basis gi_basis(const Int& b, const Int& c, const QuadraticGenerator& phi, const Int& d,
               int sign);

// Genus-2 real multiplication, pi + pi^ = c*phi + b with eigenvalue q+1:
//   (q+1-b, -c), (c*n_phi - (q+1-b)*t_phi, q+1-b).
Basis g2rm_basis(const Int& q, const Int& b, const Int& c, const QuadraticGenerator& phi);

// (q+1)^2 - s*(q+1) + n_pi.
Int g2_cardinality(const Int& q, const Int& s, const Int& n_pi);

// Genus-2 Frobenius constraints on (Tr(pi + pi^), N(pi + pi^)), compared exactly.
bool g2_validate(const Int& q, const Int& s, const Int& n_pi);

struct TrivialBound {
  Int c_abs;
  Rat b_bound;
};
// |c| = sqrt((tE^2 - 4q)/disc(phi)) and |b| <= (|tE| + |t_phi|*|c|)/2.
TrivialBound bound_trivial(const Int& q, const Int& tE, const QuadraticGenerator& phi);

// Dyadic upper bound (within 1/16 bit) of
//   (1/2)log2(N) + (1/2)log2(1 + |t_phi| + n_phi).
Rat bound_csq(const Int& N, const QuadraticGenerator& phi);
// Smallest k with 2^(k/16) >= x, i.e. ceil(16*log2(x)) for x >= 1.
Int log2_sixteenths_ceil(const Int& x);

// --- Scheme descriptors --------------------------------------------------

struct GlvScheme {
  Int p;
  std::string curve_id;
  Int b, c;
  QuadraticGenerator phi;
};
struct GlsScheme {
  Int p, t0;
};
struct QCurveScheme {
  Int p, d;
  int eps;
  Int r_param;
};
struct GlvGlsScheme {
  Int p, t0, b, c;
  QuadraticGenerator phi;
};
struct GiScheme {
  Int b, c;
  QuadraticGenerator phi;
  Int d;
  int sign;
};
struct G2rmScheme {
  Int q, s, n_pi, b, c;
  QuadraticGenerator phi;
};

using SchemeDescriptor =
    std::variant<GlvScheme, GlsScheme, QCurveScheme, GlvGlsScheme, GiScheme, G2rmScheme>;

// Validates the per-scheme parameter constraints (inclusion identities,
// Weil bounds) and returns the ready-made basis.
Basis build_basis(const SchemeDescriptor& scheme);
std::string scheme_name(const SchemeDescriptor& scheme);

// psi = c*phi + b for the GLS endomorphism over a GLV endomorphism, checked
// against the norm identity b^2 + b*c*t_phi + c^2*n_phi = p.
OrderInclusion glvgls_inclusion(const Int& p, const Int& t0, const QuadraticGenerator& phi);

// Norm(psi^2 - sign*d) for psi = c*phi + b; the determinant of gi_basis up to
// sign, and the group orders at which a consistent eigenvalue pair exists.
Int gi_norm(const Int& b, const Int& c, const QuadraticGenerator& phi, const Int& d,
            int sign);

}  // namespace shortbasis
