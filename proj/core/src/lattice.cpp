#include "shortbasis/lattice.hpp"

#include <algorithm>
#include <vector>

#include "shortbasis/error.hpp"

namespace shortbasis {

namespace {

void require_dimension(const Basis& basis, std::size_t r, const char* what) {
  if (basis.dimension() != r) {
    throw MathError(ErrorCode::kDimensionMismatch,
                    std::string(what) + " needs a " + std::to_string(r) +
                        "-dimensional basis, got " + std::to_string(basis.dimension()));
  }
}

// s*a + t*b = g = gcd(a, b) >= 0.
void extended_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
  Int old_r = a, r = b, old_s = 1, sc = 0, old_t = 0, tc = 1;
  while (r != 0) {
    const Int q = floor_div(old_r, r);
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * sc;
    old_s = sc;
    sc = tmp;
    tmp = old_t - q * tc;
    old_t = tc;
    tc = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

std::vector<Int> combine(std::span<const Int> a, const Int& ka, std::span<const Int> b,
                         const Int& kb) {
  std::vector<Int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ka * a[i] + kb * b[i];
  return out;
}

// (row) / ell if integral.
std::optional<std::vector<Int>> divide_exact(std::span<const Int> v, const Int& ell) {
  std::vector<Int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] % ell != 0) return std::nullopt;
    out[i] = v[i] / ell;
  }
  return out;
}

std::optional<Basis> accept(std::vector<Int> r0, std::vector<Int> r1, const Basis& from,
                            const DecompositionProblem& problem) {
  if (!membership(r0, problem) || !membership(r1, problem)) return std::nullopt;
  Basis out(IntMatrix::from_rows({std::move(r0), std::move(r1)}), from.scheme);
  if (basis_det(out) == 0) return std::nullopt;
  return out;
}

Int lattice_index(const Basis& basis, const DecompositionProblem& problem) {
  const Int det = abs(basis_det(basis));
  if (det == 0) throw MathError(ErrorCode::kRankDeficient, "singular basis");
  if (det % problem.modulus() != 0) {
    throw MathError(ErrorCode::kInvalidArgument,
                    "|det| = " + to_decimal(det) + " is not a multiple of N = " +
                        to_decimal(problem.modulus()));
  }
  return det / problem.modulus();
}

}  // namespace

bool membership(std::span<const Int> v, const DecompositionProblem& problem) {
  return problem.evaluate(v) == 0;
}

bool rows_in_lattice(const Basis& basis, const DecompositionProblem& problem) {
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    if (!membership(basis.rows.row(i), problem)) return false;
  }
  return true;
}

Int basis_det(const Basis& basis) { return basis.rows.determinant(); }

Basis hnf(const Basis& basis) {
  IntMatrix a = basis.rows;
  const std::size_t n = a.rows();
  for (std::size_t jj = n; jj-- > 0;) {
    for (std::size_t i = 0; i < jj; ++i) {
      if (a(i, jj) == 0) continue;
      Int g, s, t;
      extended_gcd(a(jj, jj), a(i, jj), g, s, t);
      const Int u = a(jj, jj) / g;
      const Int v = a(i, jj) / g;
      const auto pivot_row = combine(a.row(jj), s, a.row(i), t);
      const auto other_row = combine(a.row(jj), -v, a.row(i), u);
      a.set_row(jj, pivot_row);
      a.set_row(i, other_row);
    }
    if (a(jj, jj) == 0) {
      throw MathError(ErrorCode::kRankDeficient, "basis is not full rank");
    }
    if (a(jj, jj) < 0) {
      for (Int& x : a.row(jj)) x = -x;
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j-- > 0;) {
      const Int q = floor_div(a(i, j), a(j, j));
      if (q == 0) continue;
      a.set_row(i, combine(a.row(i), 1, a.row(j), -q));
    }
  }
  return Basis(std::move(a), basis.scheme);
}

bool same_lattice(const Basis& a, const Basis& b) {
  return a.dimension() == b.dimension() && hnf(a).rows == hnf(b).rows;
}

Basis gauss_reduce(const Basis& basis) {
  require_dimension(basis, 2, "gauss_reduce");
  if (basis_det(basis) == 0) {
    throw MathError(ErrorCode::kRankDeficient, "basis vectors are dependent");
  }
  std::vector<Int> u = basis.row(0);
  std::vector<Int> v = basis.row(1);
  Int uu = dot(u, u);
  Int vv = dot(v, v);
  if (uu > vv) {
    std::swap(u, v);
    std::swap(uu, vv);
  }
  for (;;) {
    const Int mu = round_nearest(Rat(dot(u, v), uu));
    if (mu != 0) {
      v = combine(v, 1, u, -mu);
      vv = dot(v, v);
    }
    if (vv < uu) {
      std::swap(u, v);
      std::swap(uu, vv);
    } else {
      break;
    }
  }
  return Basis(IntMatrix::from_rows({u, v}), basis.scheme);
}

Decomposition babai_decompose(const Basis& basis, const DecompositionProblem& problem,
                              const Int& m) {
  const std::size_t r = basis.dimension();
  if (r != problem.dimension()) {
    throw MathError(ErrorCode::kDimensionMismatch, "basis and problem dimensions differ");
  }
  const Int det = basis_det(basis);
  if (det == 0) throw MathError(ErrorCode::kRankDeficient, "singular basis");

  std::vector<Int> target(r, 0);
  target[0] = m;
  std::vector<Int> a = target;
  for (std::size_t i = 0; i < r; ++i) {
    IntMatrix replaced = basis.rows;
    replaced.set_row(i, target);
    const Int k = round_nearest(Rat(replaced.determinant(), det));
    if (k == 0) continue;
    const auto bi = basis.rows.row(i);
    for (std::size_t j = 0; j < r; ++j) a[j] -= k * bi[j];
  }
  return Decomposition{std::move(a)};
}

Basis shrink_gcd(const Basis& basis, const DecompositionProblem& problem) {
  require_dimension(basis, 2, "shrink_gcd");
  const auto b1 = basis.rows.row(0);
  const auto b2 = basis.rows.row(1);
  const Int g = gcd(b1[0], b1[1]);
  if (g <= 1) return basis;
  auto s1 = divide_exact(b1, g);
  auto s2 = divide_exact(b2, g);
  if (!s1 || !s2) return basis;
  if (auto out = accept(std::move(*s1), std::move(*s2), basis, problem)) return *out;
  return basis;
}

std::optional<Basis> shrink_two_torsion(const Basis& basis,
                                        const DecompositionProblem& problem) {
  require_dimension(basis, 2, "shrink_two_torsion");
  const auto b1 = basis.rows.row(0);
  const auto b2 = basis.rows.row(1);
  const Int& b_minus_1 = b1[0];
  const Int& c = b1[1];
  const bool c_even = c % 2 == 0;
  const bool b_odd = b_minus_1 % 2 == 0;
  // With b and c odd, b_2 is even exactly when deg(phi) is.
  const bool deg_even = b2[0] % 2 == 0 && b2[1] % 2 == 0;

  std::optional<std::vector<Int>> r0, r1;
  if (c_even) {
    r0 = divide_exact(b1, 2);
    r1 = divide_exact(b2, 2);
  } else if (b_odd && deg_even) {
    r0 = std::vector<Int>(b1.begin(), b1.end());
    r1 = divide_exact(b2, 2);
  } else {
    r0 = std::vector<Int>(b1.begin(), b1.end());
    r1 = divide_exact(combine(b1, 1, b2, 1), 2);
  }
  if (!r0 || !r1) return std::nullopt;
  return accept(std::move(*r0), std::move(*r1), basis, problem);
}

constexpr long kMaxSearchPrime = 1L << 24;

Basis shrink_prime_search(const Basis& basis, const Int& ell,
                          const DecompositionProblem& problem) {
  require_dimension(basis, 2, "shrink_prime");
  const auto b1 = basis.rows.row(0);
  const auto b2 = basis.rows.row(1);
  const std::vector<Int> v1(b1.begin(), b1.end());
  const std::vector<Int> v2(b2.begin(), b2.end());

  if (auto half2 = divide_exact(b2, ell)) {
    if (auto out = accept(v1, std::move(*half2), basis, problem)) return *out;
  }
  if (auto half1 = divide_exact(b1, ell)) {
    if (auto out = accept(std::move(*half1), v2, basis, problem)) return *out;
  }
  if (ell > kMaxSearchPrime) {
    throw MathError(ErrorCode::kTooLarge,
                    "ell = " + to_decimal(ell) + " is too large for the candidate search");
  }
  for (Int i = 1; i < ell; ++i) {
    if (auto mixed = divide_exact(combine(b1, 1, b2, i), ell)) {
      if (auto out = accept(std::move(*mixed), v2, basis, problem)) return *out;
    }
  }
  std::string detail = "no index-" + to_decimal(ell) + " superlattice inside L";
  if (b1[1] % ell == 0 && b1[0] % ell != 0) {
    detail += " (" + to_decimal(ell) + " divides c but not b-1)";
  }
  throw MathError(ErrorCode::kNoSuperlattice, detail);
}

Basis shrink_prime(const Basis& basis, const Int& ell, const DecompositionProblem& problem) {
  require_dimension(basis, 2, "shrink_prime");
  const Int index = lattice_index(basis, problem);
  if (index % ell != 0) {
    throw MathError(ErrorCode::kNoSuperlattice,
                    to_decimal(ell) + " does not divide the index " + to_decimal(index));
  }
  if (ell == 2) {
    if (auto fast = shrink_two_torsion(basis, problem)) return *fast;
  }
  return shrink_prime_search(basis, ell, problem);
}

Basis shrink_to_fit(const Basis& basis, const DecompositionProblem& problem) {
  require_dimension(basis, 2, "shrink_to_fit");
  if (!rows_in_lattice(basis, problem)) {
    throw MathError(ErrorCode::kInvalidArgument, "basis rows are not in the lattice");
  }
  Basis current = shrink_gcd(basis, problem);
  for (Int index = lattice_index(current, problem); index != 1;
       index = lattice_index(current, problem)) {
    const Int ell = factor(index).front().first;
    current = shrink_prime(current, ell, problem);
  }
  return current;
}

std::size_t norm_bits(const Basis& basis) { return bit_length(basis.rows.max_abs_entry()); }

}  // namespace shortbasis
