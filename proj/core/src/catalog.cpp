#include "shortbasis/catalog.hpp"

#include <algorithm>

#include "shortbasis/error.hpp"

namespace shortbasis {

namespace {

Rat r(long long num, long long den = 1) { return Rat(Int(num), Int(den)); }

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"j1728", 1728, r(1), r(0), r(1), r(0), true, -1, {0, 1}, 0, r(0), r(0)});
  out.push_back({"j0", 0, r(1), r(0), r(0), r(1), true, -3, {-1, 1}, 0, r(0), r(0)});
  // The rational 2-torsion point (2, 0) generates the kernel of a 2-isogeny
  // to j = 16581375; the endomorphism (1 + sqrt(-7))/2 kills one of the two
  // other 2-torsion points, x = (-5 +- sqrt(-7))/8.
  out.push_back({"j-3375", -3375, r(1), r(-3, 4), r(-2), r(-1), false, -7, {1, 2}, 2,
                 r(-5, 8), r(1, 8)});
  out.push_back({"j8000", 8000, r(4), r(0), r(-30), r(-28), false, -2, {0, 2}, 2, r(-2), r(0)});
  // 24/7 * (1 - 1/sqrt(-11)) = 24/7 + (24/77) * sqrt(-11).
  out.push_back({"j32768", 32768, r(1), r(0), r(-13824, 539), r(27648, 539), false, -11,
                 {1, 3}, 3, r(24, 7), r(24, 77)});
  out.push_back({"j54000", 54000, r(1), r(0), r(-3375, 121), r(6750, 121), false, -3, {0, 3},
                 3, r(45, 11), r(0)});
  return out;
}

// X = k3*x + k2/3 turns the printed model into a short one.
Fe normalise_x(const Field& F, const CatalogEntry& e, const Fe& x) {
  return F.add(F.mul(F.from_rat(e.k3), x), F.from_rat(e.k2 / Rat(3)));
}

// Both square roots of d, smaller representative first.
std::vector<Fe> square_roots(const Field& F, const Int& d, std::string_view id) {
  const auto root = F.sqrt(F.from_int(d));
  if (!root) {
    throw MathError(ErrorCode::kConstantMissing, "sqrt(" + to_decimal(d) + ") is not in F_" +
                                                     to_decimal(F.order()) + " (" +
                                                     std::string(id) + ")");
  }
  std::vector<Fe> roots{*root, F.neg(*root)};
  std::sort(roots.begin(), roots.end(), [](const Fe& a, const Fe& b) {
    return a.c1 != b.c1 ? a.c1 < b.c1 : a.c0 < b.c0;
  });
  return roots;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view id) {
  for (const CatalogEntry& e : catalog()) {
    if (e.id == id) return e;
  }
  throw MathError(ErrorCode::kInvalidArgument, "unknown catalog curve '" + std::string(id) + "'");
}

CurveInstance catalog_curve(std::string_view id, const Field& field, const Int& a) {
  const CatalogEntry& e = catalog_entry(id);
  const Field& F = field;
  Fe k1 = F.from_rat(e.k1);
  Fe k0 = F.from_rat(e.k0);
  if (e.parametric) {
    const Fe fa = F.from_int(a);
    if (F.is_zero(fa)) throw MathError(ErrorCode::kInvalidArgument, "curve parameter a = 0");
    k1 = F.mul(k1, fa);
    k0 = F.mul(k0, fa);
  }
  const Fe k3 = F.from_rat(e.k3);
  const Fe k2 = F.from_rat(e.k2);
  if (F.is_zero(k3)) throw MathError(ErrorCode::kSingularCurve, "leading coefficient vanishes");
  // A = k1*k3 - k2^2/3, B = k0*k3^2 - k1*k2*k3/3 + 2*k2^3/27.
  const Fe third = F.inv(F.from_int(3));
  const Fe A = F.sub(F.mul(k1, k3), F.mul(F.sqr(k2), third));
  Fe B = F.mul(k0, F.sqr(k3));
  B = F.sub(B, F.mul(F.mul(F.mul(k1, k2), k3), third));
  B = F.add(B, F.mul(F.mul(F.from_int(2), F.mul(F.sqr(k2), k2)), F.inv(F.from_int(27))));
  return CurveInstance(F, A, B, e.id);
}

Endomorphism catalog_endo(std::string_view id, const CurveInstance& curve) {
  const CatalogEntry& e = catalog_entry(id);
  const Field& F = curve.field();
  const std::vector<Fe> roots = square_roots(F, e.needed_square, id);

  if (e.id == "j1728") {
    const Fe& i = roots.front();
    return Endomorphism::coordinate_map(F, F.neg(F.one()), F.neg(i), e.char_poly);
  }
  if (e.id == "j0") {
    // zeta_3 = (-1 + sqrt(-3)) / 2.
    const Fe zeta = F.mul(F.sub(roots.front(), F.one()), F.inv(F.from_int(2)));
    return Endomorphism::coordinate_map(F, zeta, F.one(), e.char_poly);
  }

  std::optional<MathError> last_error;
  for (const Fe& root : roots) {
    const Fe x = F.add(F.from_rat(e.kernel_rational), F.mul(F.from_rat(e.kernel_radical), root));
    try {
      return velu_endo(curve, normalise_x(F, e, x), e.degree, e.char_poly);
    } catch (const MathError& err) {
      if (err.code() != ErrorCode::kBadKernel && err.code() != ErrorCode::kNoIsomorphism) throw;
      last_error = err;
    }
    if (e.kernel_radical == 0) break;
  }
  throw *last_error;
}

OrderInclusion recover_frobenius(const CurveInstance& curve, const Endomorphism& phi,
                                 std::mt19937_64& rng, int samples) {
  const Field& F = curve.field();
  if (F.degree() != 1) {
    throw MathError(ErrorCode::kInvalidArgument, "recover_frobenius works over prime fields");
  }
  const Int& p = F.characteristic();
  const QuadraticGenerator& g = phi.char_poly();
  std::vector<Point> points;
  for (int i = 0; i < samples; ++i) points.push_back(curve.random_point(rng));

  for (const TraceConductor& tc : cornacchia_4q(discriminant(g), p)) {
    for (const Int& t : {tc.t, Int(-tc.t)}) {
      for (const Int& c : {tc.c, Int(-tc.c)}) {
        if (c == 0) continue;
        const Int twice_b = t - c * g.trace;
        if (twice_b % 2 != 0) continue;
        const OrderInclusion inc{twice_b / 2, c};
        const bool kills = std::all_of(points.begin(), points.end(), [&](const Point& P) {
          return curve.add(curve.scalar_mul(c, phi(P)), curve.scalar_mul(inc.b - 1, P)).infinity;
        });
        if (kills) return inc;
      }
    }
  }
  throw MathError(ErrorCode::kNoSolution, "no Frobenius representation matches the curve");
}

}  // namespace shortbasis
