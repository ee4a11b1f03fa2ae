#include "shortbasis/quadratic_orders.hpp"

#include <algorithm>
#include <set>

#include "shortbasis/error.hpp"

namespace shortbasis {

Int discriminant(const QuadraticGenerator& g) {
  Int d = g.trace * g.trace - 4 * g.norm;
  if (d == 0) {
    throw MathError(ErrorCode::kDegenerateOrder,
                    "T^2 - " + to_decimal(g.trace) + "T + " + to_decimal(g.norm) +
                        " has a repeated integer root");
  }
  return d;
}

Int evaluate_charpoly(const QuadraticGenerator& g, const Int& x) {
  return x * x - g.trace * x + g.norm;
}

OrderInclusion relation_bc(const QuadraticGenerator& sub, const QuadraticGenerator& sup) {
  const Int d_sub = discriminant(sub);
  const Int d_sup = discriminant(sup);
  if (d_sub % d_sup != 0) {
    throw MathError(ErrorCode::kNotIncluded, "discriminant ratio " + to_decimal(d_sub) +
                                                 "/" + to_decimal(d_sup) +
                                                 " is not integral");
  }
  const Int ratio = d_sub / d_sup;
  if (ratio <= 0 || !is_square(ratio)) {
    throw MathError(ErrorCode::kNotIncluded,
                    "discriminant ratio " + to_decimal(ratio) + " is not a square");
  }
  const Int c = exact_sqrt(ratio);
  const Int twice_b = sub.trace - c * sup.trace;
  if (twice_b % 2 != 0) {
    throw MathError(ErrorCode::kParityError,
                    "trace difference " + to_decimal(twice_b) + " is odd");
  }
  return {twice_b / 2, c};
}

OrderInclusion conjugate_inclusion(const OrderInclusion& inc,
                                   const QuadraticGenerator& sup) {
  return {inc.b + inc.c * sup.trace, -inc.c};
}

QuadraticGenerator image_generator(const OrderInclusion& inc,
                                   const QuadraticGenerator& sup) {
  return {inc.c * sup.trace + 2 * inc.b,
          inc.b * inc.b + inc.b * inc.c * sup.trace + inc.c * inc.c * sup.norm};
}

std::pair<RelationRow, RelationRow> lemma_relations(const OrderInclusion& inc,
                                                    const QuadraticGenerator& sup) {
  RelationRow first{-inc.b, -inc.c, 1, 0};
  RelationRow second{inc.c * sup.norm + inc.b * sup.trace, -inc.b, -sup.trace, 1};
  return {first, second};
}

namespace {

// All r in [0, m) with r^2 = a (mod m), for m = q or m = 4q with q prime.
std::vector<Int> square_roots(const Int& a, const Int& m, const Int& q) {
  std::vector<Int> roots;
  if (m <= 64) {
    for (Int r = 0; r < m; ++r) {
      if (floor_mod(r * r - a, m) == 0) roots.push_back(r);
    }
    return roots;
  }
  const auto s = sqrt_mod_prime(a, q);
  if (!s) return roots;
  std::set<Int> mod_q{*s, floor_mod(-*s, q)};
  if (m == q) return {mod_q.begin(), mod_q.end()};
  // m = 4q with q odd: combine roots mod q with roots mod 4.
  std::vector<Int> mod_4;
  for (int r = 0; r < 4; ++r) {
    if (floor_mod(Int(r * r) - a, 4) == 0) mod_4.emplace_back(r);
  }
  const Int inv4 = mod_inv(4, q);
  const Int invq = mod_inv(q, 4);
  for (const Int& rq : mod_q) {
    for (const Int& r4 : mod_4) {
      roots.push_back(floor_mod(rq * 4 * inv4 + r4 * q * invq, m));
    }
  }
  return roots;
}

// Primitive solutions of x^2 + d*y^2 = m with x, y >= 0.
void cornacchia(const Int& d, const Int& m, const Int& q, std::set<TraceConductor>& out) {
  const Int bound = isqrt(m);
  for (Int r : square_roots(-d, m, q)) {
    if (2 * r > m) r = m - r;
    Int a = m;
    Int b = r;
    while (b > bound) {
      Int next = a % b;
      a = b;
      b = next;
    }
    const Int rest = m - b * b;
    if (rest < 0 || rest % d != 0) continue;
    const Int y2 = rest / d;
    if (!is_square(y2)) continue;
    const Int y = isqrt(y2);
    if (gcd(b, y) == 1) out.insert({b, y});
  }
}

}  // namespace

std::vector<TraceConductor> cornacchia_4q(const Int& D, const Int& q) {
  if (D >= 0) {
    throw MathError(ErrorCode::kInvalidArgument, "D must be negative");
  }
  if (!is_prime(q)) {
    throw MathError(ErrorCode::kInvalidArgument, to_decimal(q) + " is not prime");
  }
  const Int d = -D;
  std::set<TraceConductor> found;
  cornacchia(d, 4 * q, q, found);
  std::set<TraceConductor> half;
  cornacchia(d, q, q, half);
  for (const auto& s : half) found.insert({2 * s.t, 2 * s.c});
  if (found.empty()) {
    throw MathError(ErrorCode::kNoSolution, "t^2 + " + to_decimal(d) + "c^2 = 4*" +
                                                to_decimal(q) + " has no solution");
  }
  std::vector<TraceConductor> result(found.rbegin(), found.rend());
  return result;
}

Int transfer_eigenvalue(const OrderInclusion& inc, const Int& lambda_sub, const Int& N) {
  return floor_mod((lambda_sub - inc.b) * mod_inv(inc.c, N), N);
}

}  // namespace shortbasis
