#include "shortbasis/basis_builders.hpp"

#include "shortbasis/error.hpp"
#include "shortbasis/lattice.hpp"

namespace shortbasis {

namespace {

void require_nonzero_c(const Int& c) {
  if (c == 0) {
    throw MathError(ErrorCode::kDegenerateInclusion, "c = 0: Frobenius would be an integer");
  }
}

void require_unit(int value, const char* name) {
  if (value != 1 && value != -1) {
    throw MathError(ErrorCode::kInvalidArgument, std::string(name) + " must be +1 or -1");
  }
}

Basis four_dimensional(IntMatrix rows, const char* tag) {
  Basis basis(std::move(rows), tag);
  if (basis_det(basis) == 0) {
    throw MathError(ErrorCode::kDegenerateConfiguration,
                    std::string(tag) + " rows are linearly dependent");
  }
  return basis;
}

}  // namespace

Basis long_basis(const DecompositionProblem& problem) {
  const std::size_t r = problem.dimension();
  IntMatrix m(r, r);
  m(0, 0) = problem.modulus();
  for (std::size_t i = 1; i < r; ++i) {
    m(i, 0) = -problem.eigenvalues()[i - 1];
    m(i, i) = 1;
  }
  return Basis(std::move(m), "long");
}

Basis ec2d_basis(const Int& b, const Int& c, const QuadraticGenerator& phi) {
  require_nonzero_c(c);
  const Int bm1 = b - 1;
  return Basis(IntMatrix{{bm1, c}, {c * phi.norm + bm1 * phi.trace, -bm1}}, "glv");
}

Basis gls_basis(const Int& p, const Int& t0) {
  if (t0 == 0 || t0 * t0 > 4 * p) {
    throw MathError(ErrorCode::kWeilViolation,
                    "need 0 < |t0| <= 2*sqrt(p), got t0 = " + to_decimal(t0));
  }
  return Basis(IntMatrix{{p - 1, -t0}, {-t0, 1 - p}}, "gls");
}

Int qcurve_trace(const Int& p, const Int& d, int eps, const Int& r_param) {
  require_unit(eps, "eps");
  return eps * (d * r_param * r_param - 2 * p);
}

Basis qcurve_basis(const Int& p, const Int& d, int eps, const Int& r_param) {
  const Int tE = qcurve_trace(p, d, eps, r_param);
  if (abs(tE) > 2 * p) {
    throw MathError(ErrorCode::kWeilViolation,
                    "t_E = " + to_decimal(tE) + " exceeds 2p = " + to_decimal(2 * p));
  }
  const Int top = 1 + eps * p;
  return Basis(IntMatrix{{-top, r_param}, {-eps * r_param * d, top}}, "qcurve");
}

Basis glvgls_basis(const Int& b, const Int& c, const QuadraticGenerator& phi) {
  require_nonzero_c(c);
  const Int cn = c * phi.norm;
  const Int ctb = c * phi.trace + b;
  return four_dimensional(IntMatrix{{1, 0, b, c},
                                    {0, 1, -cn, ctb},
                                    {-b, -c, 1, 0},
                                    {cn, -ctb, 0, 1}},
                          "glvgls");
}

Basis gi_basis(const Int& b, const Int& c, const QuadraticGenerator& phi, const Int& d,
               int sign) {
  require_nonzero_c(c);
  require_unit(sign, "sign");
  if (d < 1) throw MathError(ErrorCode::kInvalidArgument, "d must be positive");
  const Int sd = sign * d;
  const Int cn = c * phi.norm;
  const Int ctb = c * phi.trace + b;
  return four_dimensional(IntMatrix{{sd, 0, -b, -c},
                                    {0, sd, cn, -ctb},
                                    {-b, -c, 1, 0},
                                    {cn, -ctb, 0, 1}},
                          "gi");
}

Basis g2rm_basis(const Int& q, const Int& b, const Int& c, const QuadraticGenerator& phi) {
  require_nonzero_c(c);
  const Int k = q + 1 - b;
  return Basis(IntMatrix{{k, -c}, {c * phi.norm - k * phi.trace, k}}, "g2rm");
}

Int g2_cardinality(const Int& q, const Int& s, const Int& n_pi) {
  return (q + 1) * (q + 1) - s * (q + 1) + n_pi;
}

bool g2_validate(const Int& q, const Int& s, const Int& n_pi) {
  if (q < 2) throw MathError(ErrorCode::kInvalidArgument, "q must be at least 2");
  if (s * s > 16 * q) return false;
  if (abs(n_pi) > 4 * q) return false;
  if (s * s - 4 * n_pi <= 0) return false;
  // n + 4q > 2|s|sqrt(q)  <=>  n + 4q > 0 and (n + 4q)^2 > 4 s^2 q.
  const Int lhs = n_pi + 4 * q;
  return lhs > 0 && lhs * lhs > 4 * s * s * q;
}

TrivialBound bound_trivial(const Int& q, const Int& tE, const QuadraticGenerator& phi) {
  const Int disc_phi = discriminant(phi);
  const Int num = tE * tE - 4 * q;
  if (num % disc_phi != 0) {
    throw MathError(ErrorCode::kNotASquare, "(tE^2 - 4q)/disc(phi) is not integral");
  }
  const Int c_abs = exact_sqrt(num / disc_phi);
  return {c_abs, Rat(abs(tE) + abs(phi.trace) * c_abs, 2)};
}

Int log2_sixteenths_ceil(const Int& x) {
  if (x < 1) throw MathError(ErrorCode::kNonPositiveArg, "log of " + to_decimal(x));
  const Int x16 = boost::multiprecision::pow(x, 16);
  // Smallest k with 2^k >= x^16.
  return Int(bit_length(x16 - 1));
}

Rat bound_csq(const Int& N, const QuadraticGenerator& phi) {
  const Int arg = 1 + abs(phi.trace) + phi.norm;
  if (arg <= 0) {
    throw MathError(ErrorCode::kNonPositiveArg, "1 + |t_phi| + n_phi = " + to_decimal(arg));
  }
  if (N < 1) throw MathError(ErrorCode::kNonPositiveArg, "N = " + to_decimal(N));
  return Rat(log2_sixteenths_ceil(N) + log2_sixteenths_ceil(arg), 32);
}

OrderInclusion glvgls_inclusion(const Int& p, const Int& t0, const QuadraticGenerator& phi) {
  const OrderInclusion inc = relation_bc(QuadraticGenerator{t0, p}, phi);
  if (image_generator(inc, phi).norm != p) {
    throw MathError(ErrorCode::kNotIncluded,
                    "c*phi + b does not have norm p = " + to_decimal(p));
  }
  return inc;
}

Int gi_norm(const Int& b, const Int& c, const QuadraticGenerator& phi, const Int& d,
            int sign) {
  const QuadraticGenerator psi = image_generator({b, c}, phi);
  const Int tr_sq = psi.trace * psi.trace - 2 * psi.norm;
  const Int n_sq = psi.norm * psi.norm;
  const Int sd = sign * d;
  return sd * sd - tr_sq * sd + n_sq;
}

Basis build_basis(const SchemeDescriptor& scheme) {
  return std::visit(
      [](const auto& s) -> Basis {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GlvScheme>) {
          Basis basis = ec2d_basis(s.b, s.c, s.phi);
          const QuadraticGenerator frob = image_generator({s.b, s.c}, s.phi);
          if (s.p != 0 && frob.norm != s.p) {
            throw MathError(ErrorCode::kNotIncluded,
                            "b^2 + bc*t_phi + c^2*n_phi != p for the given (b, c)");
          }
          return basis;
        } else if constexpr (std::is_same_v<T, GlsScheme>) {
          return gls_basis(s.p, s.t0);
        } else if constexpr (std::is_same_v<T, QCurveScheme>) {
          return qcurve_basis(s.p, s.d, s.eps, s.r_param);
        } else if constexpr (std::is_same_v<T, GlvGlsScheme>) {
          const QuadraticGenerator psi = image_generator({s.b, s.c}, s.phi);
          if (psi.norm != s.p || psi.trace != s.t0) {
            throw MathError(ErrorCode::kNotIncluded,
                            "c*phi + b does not have trace t0 and norm p");
          }
          return glvgls_basis(s.b, s.c, s.phi);
        } else if constexpr (std::is_same_v<T, GiScheme>) {
          return gi_basis(s.b, s.c, s.phi, s.d, s.sign);
        } else {
          const QuadraticGenerator rm = image_generator({s.b, s.c}, s.phi);
          if (rm.trace != s.s || rm.norm != s.n_pi) {
            throw MathError(ErrorCode::kNotIncluded,
                            "c*phi + b does not have trace s and norm n_pi");
          }
          if (!g2_validate(s.q, s.s, s.n_pi)) {
            throw MathError(ErrorCode::kWeilViolation,
                            "(s, n_pi) violates the genus-2 Frobenius bounds");
          }
          return g2rm_basis(s.q, s.b, s.c, s.phi);
        }
      },
      scheme);
}

std::string scheme_name(const SchemeDescriptor& scheme) {
  static constexpr const char* kNames[] = {"glv", "gls", "qcurve", "glvgls", "gi", "g2rm"};
  return kNames[scheme.index()];
}

}  // namespace shortbasis
