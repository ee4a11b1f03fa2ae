#include "shortbasis/instances.hpp"

#include <algorithm>
#include <array>

#include "shortbasis/catalog.hpp"
#include "shortbasis/error.hpp"
#include "shortbasis/lattice.hpp"

namespace shortbasis {

namespace {

constexpr int kMaxDraws = 10000;

Int random_prime_bits(std::mt19937_64& rng, unsigned bits) {
  if (bits < 3) throw MathError(ErrorCode::kInvalidArgument, "need at least 3 bits");
  return random_prime(rng, Int(1) << (bits - 1), (Int(1) << bits) - 1);
}

int random_sign(std::mt19937_64& rng) { return (rng() & 1) != 0 ? 1 : -1; }

constexpr unsigned kFullFactorBits = 64;
constexpr unsigned kSmoothBound = 1u << 16;

// Odd prime factors of |n| in decreasing order. Above 64 bits only numbers of
// the form (2^16-smooth) * (1 or a prime) are split; anything else yields an
// empty list, as its cofactor would be too large to matter.
std::vector<Int> odd_prime_factors_desc(const Int& n) {
  std::vector<Int> out;
  Int m = abs(n);
  if (bit_length(m) <= kFullFactorBits) {
    for (const auto& [prime, exponent] : factor(m)) {
      if (prime > 2) out.push_back(prime);
    }
  } else {
    while (m % 2 == 0) m /= 2;
    for (unsigned d = 3; d < kSmoothBound && m > 1; d += 2) {
      if (m % d != 0) continue;
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
    if (m > 1) {
      if (!is_prime(m)) return {};
      out.push_back(m);
    }
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

[[noreturn]] void exhausted(const char* what) {
  throw MathError(ErrorCode::kNoSolution, std::string("no admissible ") + what + " instance found");
}

// Largest odd prime N of #E with N^2 not dividing #E, plus a point of order N.
std::optional<std::pair<Int, Point>> prime_subgroup(const CurveInstance& curve, const Int& order,
                                                    std::mt19937_64& rng) {
  const std::vector<Int> primes = odd_prime_factors_desc(order);
  if (primes.empty()) return std::nullopt;
  const Int& N = primes.front();
  if ((order / N) % N == 0) return std::nullopt;
  return std::make_pair(N, curve.random_point_of_order(rng, N, order / N));
}

}  // namespace

std::optional<Int> admissible_modulus(const Int& n, const Int& avoid) {
  for (const Int& prime : odd_prime_factors_desc(n)) {
    if (avoid % prime != 0) return prime;
  }
  return std::nullopt;
}

std::optional<std::vector<Int>> four_dim_eigenvalues(const Int& b, const Int& c,
                                                     const QuadraticGenerator& phi,
                                                     const Int& sd, const Int& N) {
  const auto root = sqrt_mod_prime(floor_mod(discriminant(phi), N), N);
  if (!root) return std::nullopt;
  const Int inv2 = mod_inv(2, N);
  for (const Int& s : {*root, Int(-*root)}) {
    const Int lphi = floor_mod((phi.trace + s) * inv2, N);
    const Int lpsi = floor_mod(c * lphi + b, N);
    if (floor_mod(lpsi * lpsi - sd, N) == 0) return std::vector<Int>{lphi, lpsi, lphi * lpsi % N};
  }
  return std::nullopt;
}

LatticeInstance random_gls_lattice(std::mt19937_64& rng, unsigned bits) {
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const Int p = random_prime_bits(rng, bits);
    const Int bound = isqrt(4 * p);
    const Int t0 = random_between(rng, -bound, bound);
    if (t0 == 0) continue;
    const Int order = (p - 1) * (p - 1) + t0 * t0;
    const auto N = admissible_modulus(order, t0);
    if (!N) continue;
    const Int lambda = floor_mod((p - 1) * mod_inv(t0, *N), *N);
    return {GlsScheme{p, t0}, gls_basis(p, t0), DecompositionProblem(*N, {lambda}), order,
            QuadraticGenerator{t0, p}};
  }
  exhausted("GLS");
}

LatticeInstance random_qcurve_lattice(std::mt19937_64& rng, unsigned bits) {
  static constexpr std::array<int, 8> kDegrees{2, 3, 5, 6, 7, 10, 11, 13};
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const Int p = random_prime_bits(rng, bits);
    const Int d = kDegrees[rng() % kDegrees.size()];
    const int eps = random_sign(rng);
    const Int r_max = isqrt(4 * p / d);
    if (r_max < 1) continue;
    const Int r = random_sign(rng) * random_between(rng, 1, r_max);
    const Basis basis = qcurve_basis(p, d, eps, r);
    const Int order = abs(basis_det(basis));
    const auto N = admissible_modulus(order, r * d);
    if (!N) continue;
    const Int lambda = floor_mod((1 + eps * p) * mod_inv(r, *N), *N);
    return {QCurveScheme{p, d, eps, r}, basis, DecompositionProblem(*N, {lambda}), order,
            QuadraticGenerator{eps * r * d, d * p}};
  }
  exhausted("Q-curve");
}

LatticeInstance random_gi_lattice(std::mt19937_64& rng, unsigned bits) {
  static const std::array<QuadraticGenerator, 6> kPhis{
      QuadraticGenerator{0, 1}, QuadraticGenerator{-1, 1}, QuadraticGenerator{1, 2},
      QuadraticGenerator{0, 2}, QuadraticGenerator{1, 3}, QuadraticGenerator{0, 3}};
  const Int half = Int(1) << std::max(2u, bits / 2);
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const QuadraticGenerator phi = kPhis[rng() % kPhis.size()];
    const Int b = random_between(rng, -half, half);
    const Int c = random_sign(rng) * random_between(rng, 1, half);
    const Int d = random_between(rng, 1, 20);
    const int sign = random_sign(rng);
    const Int norm = gi_norm(b, c, phi, d, sign);
    if (norm == 0) continue;
    for (const Int& N : odd_prime_factors_desc(norm)) {
      if (c % N == 0) continue;
      if (auto eigen = four_dim_eigenvalues(b, c, phi, sign * d, N)) {
        return {GiScheme{b, c, phi, d, sign}, gi_basis(b, c, phi, d, sign),
                DecompositionProblem(N, std::move(*eigen)), abs(norm), phi};
      }
    }
  }
  exhausted("GI");
}

LatticeInstance random_g2rm_lattice(std::mt19937_64& rng, unsigned bits) {
  static const std::array<QuadraticGenerator, 2> kPhis{QuadraticGenerator{-1, -1},
                                                       QuadraticGenerator{0, -2}};
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const Int q = random_prime_bits(rng, bits);
    const Int root_q = isqrt(q);
    const QuadraticGenerator phi = kPhis[rng() % kPhis.size()];
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const Int c = random_sign(rng) * random_between(rng, 1, root_q);
      const Int b = random_between(rng, -2 * root_q, 2 * root_q);
      const QuadraticGenerator rm = image_generator({b, c}, phi);
      if (!g2_validate(q, rm.trace, rm.norm)) continue;
      const Int order = g2_cardinality(q, rm.trace, rm.norm);
      const auto N = admissible_modulus(order, c);
      if (!N) break;
      const Int lphi = transfer_eigenvalue({b, c}, q + 1, *N);
      return {G2rmScheme{q, rm.trace, rm.norm, b, c, phi}, g2rm_basis(q, b, c, phi),
              DecompositionProblem(*N, {lphi}), order, phi};
    }
  }
  exhausted("genus-2 RM");
}

std::optional<CurveBackedInstance> gls_curve_instance(const CurveInstance& base,
                                                      std::mt19937_64& rng) {
  GlsSetup setup = gls_setup(base);
  const Int p = base.field().characteristic();
  const Int order = *setup.twist.order();
  const auto sub = prime_subgroup(setup.twist, order, rng);
  if (!sub) return std::nullopt;
  const auto& [N, P] = *sub;
  const Int lambda = resolve_eigenvalue(setup.twist, setup.psi, P, N);
  LatticeInstance lattice{GlsScheme{p, setup.t0}, gls_basis(p, setup.t0),
                          DecompositionProblem(N, {lambda}), order, setup.psi.char_poly()};
  return CurveBackedInstance{std::move(lattice), setup.twist, P, order / N, {setup.psi}};
}

std::optional<CurveBackedInstance> glv_curve_instance(std::string_view curve_id, const Int& p,
                                                      std::mt19937_64& rng, const Int& a) {
  const Field F = Field::prime(p);
  CurveInstance curve = catalog_curve(curve_id, F, a);
  Endomorphism phi = catalog_endo(curve_id, curve);
  const OrderInclusion inc = recover_frobenius(curve, phi, rng);
  Basis basis = ec2d_basis(inc.b, inc.c, phi.char_poly());
  const Int order = abs(basis_det(basis));
  curve.set_order(order);
  const auto sub = prime_subgroup(curve, order, rng);
  if (!sub) return std::nullopt;
  const auto& [N, P] = *sub;
  const Int lambda = resolve_eigenvalue(curve, phi, P, N);
  LatticeInstance lattice{GlvScheme{p, std::string(curve_id), inc.b, inc.c, phi.char_poly()},
                          std::move(basis), DecompositionProblem(N, {lambda}), order,
                          phi.char_poly()};
  return CurveBackedInstance{std::move(lattice), std::move(curve), P, order / N, {phi}};
}

std::optional<CurveBackedInstance> glvgls_curve_instance(const Int& p, const Int& a,
                                                         std::mt19937_64& rng) {
  if (p % 4 != 1) throw MathError(ErrorCode::kInvalidArgument, "GLV+GLS needs p = 1 (mod 4)");
  const CurveInstance base = catalog_curve("j1728", Field::prime(p), a);
  const GlsSetup setup = gls_setup(base);
  const Endomorphism phi = transport_to_twist(catalog_endo("j1728", base), setup);
  const QuadraticGenerator& g = phi.char_poly();
  OrderInclusion inc = glvgls_inclusion(p, setup.t0, g);

  const Int order = *setup.twist.order();
  const auto sub = prime_subgroup(setup.twist, order, rng);
  if (!sub) return std::nullopt;
  const auto& [N, P] = *sub;
  const Int lphi = resolve_eigenvalue(setup.twist, phi, P, N);
  const Int lpsi = resolve_eigenvalue(setup.twist, setup.psi, P, N);
  if (floor_mod(inc.c * lphi + inc.b - lpsi, N) != 0) inc.c = -inc.c;
  if (floor_mod(inc.c * lphi + inc.b - lpsi, N) != 0) {
    throw MathError(ErrorCode::kInconsistentEigenvalue,
                    "lambda_psi is not c*lambda_phi + b for either sign of c");
  }
  // phi*psi = c*phi^2 + b*phi.
  const QuadraticGenerator both{inc.c * (g.trace * g.trace - 2 * g.norm) + inc.b * g.trace,
                                g.norm * p};
  Endomorphism phipsi = Endomorphism::compose(phi, setup.psi, both);
  LatticeInstance lattice{GlvGlsScheme{p, setup.t0, inc.b, inc.c, g},
                          glvgls_basis(inc.b, inc.c, g),
                          DecompositionProblem(N, {lphi, lpsi, lphi * lpsi % N}), order, g};
  return CurveBackedInstance{std::move(lattice), setup.twist, P, order / N,
                             {phi, setup.psi, std::move(phipsi)}};
}

}  // namespace shortbasis
