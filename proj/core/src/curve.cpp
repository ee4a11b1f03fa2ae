#include "shortbasis/curve.hpp"

#include <algorithm>
#include <cstdint>

#include "shortbasis/error.hpp"
#include "shortbasis/lattice.hpp"

namespace shortbasis {

// --- Field ---------------------------------------------------------------

Field Field::prime(const Int& p) {
  if (p < 3 || !is_prime(p)) {
    throw MathError(ErrorCode::kInvalidArgument, to_decimal(p) + " is not an odd prime");
  }
  return Field(p, 1, 0);
}

Field Field::quadratic(const Int& p) {
  if (p < 3 || !is_prime(p)) {
    throw MathError(ErrorCode::kInvalidArgument, to_decimal(p) + " is not an odd prime");
  }
  Int ns = 2;
  while (legendre(ns, p) != -1) ++ns;
  return Field(p, 2, ns);
}

Fe Field::from_rat(const Rat& v) const {
  if (v.den() % p_ == 0) {
    throw MathError(ErrorCode::kInvalidArgument,
                    "denominator of " + v.to_string() + " vanishes mod " + to_decimal(p_));
  }
  return {floor_mod(v.num() * mod_inv(v.den(), p_), p_), 0};
}

Fe Field::element(const Int& c0, const Int& c1) const {
  if (degree_ == 1 && floor_mod(c1, p_) != 0) {
    throw MathError(ErrorCode::kInvalidArgument, "F_p element with a u-component");
  }
  return {floor_mod(c0, p_), floor_mod(c1, p_)};
}

Fe Field::gen() const {
  if (degree_ != 2) throw MathError(ErrorCode::kInvalidArgument, "F_p has no generator u");
  return {0, 1};
}

Fe Field::add(const Fe& a, const Fe& b) const {
  Fe r{a.c0 + b.c0, a.c1 + b.c1};
  if (r.c0 >= p_) r.c0 -= p_;
  if (r.c1 >= p_) r.c1 -= p_;
  return r;
}

Fe Field::sub(const Fe& a, const Fe& b) const {
  Fe r{a.c0 - b.c0, a.c1 - b.c1};
  if (r.c0 < 0) r.c0 += p_;
  if (r.c1 < 0) r.c1 += p_;
  return r;
}

Fe Field::neg(const Fe& a) const { return sub(zero(), a); }

Fe Field::mul(const Fe& a, const Fe& b) const {
  if (degree_ == 1) return {a.c0 * b.c0 % p_, 0};
  return {(a.c0 * b.c0 + ns_ * (a.c1 * b.c1)) % p_, (a.c0 * b.c1 + a.c1 * b.c0) % p_};
}

Int Field::norm(const Fe& a) const {
  if (degree_ == 1) return a.c0;
  return floor_mod(a.c0 * a.c0 - ns_ * a.c1 * a.c1, p_);
}

Fe Field::inv(const Fe& a) const {
  if (is_zero(a)) throw MathError(ErrorCode::kNotInvertible, "zero field element");
  if (degree_ == 1) return {mod_inv(a.c0, p_), 0};
  const Int n_inv = mod_inv(norm(a), p_);
  return {a.c0 * n_inv % p_, floor_mod(-a.c1 * n_inv, p_)};
}

Fe Field::pow(const Fe& a, const Int& e) const {
  if (e < 0) return pow(inv(a), -e);
  Fe result = one();
  Fe base = a;
  Int k = e;
  while (k > 0) {
    if ((k & 1) != 0) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = sqr(base);
  }
  return result;
}

Fe Field::frobenius(const Fe& a) const {
  // u^p = -u because ns is a non-residue.
  if (degree_ == 1) return a;
  return {a.c0, a.c1 == 0 ? Int(0) : Int(p_ - a.c1)};
}

bool Field::is_square(const Fe& a) const {
  if (is_zero(a)) return true;
  return legendre(norm(a), p_) == 1;
}

std::optional<Fe> Field::sqrt(const Fe& a) const {
  if (is_zero(a)) return zero();
  if (degree_ == 1) {
    auto r = sqrt_mod_prime(a.c0, p_);
    if (!r) return std::nullopt;
    return Fe{*r, 0};
  }
  if (!is_square(a)) return std::nullopt;
  std::optional<Fe> root;
  if (a.c1 == 0) {
    if (auto r = sqrt_mod_prime(a.c0, p_)) {
      root = Fe{*r, 0};
    } else {
      // a0 = k^2 * ns, so sqrt(a0) = k*u.
      const auto k = sqrt_mod_prime(a.c0 * mod_inv(ns_, p_), p_);
      root = Fe{0, *k};
    }
  } else {
    const Int s = *sqrt_mod_prime(norm(a), p_);
    const Int half = mod_inv(2, p_);
    std::optional<Int> x0 = sqrt_mod_prime((a.c0 + s) * half, p_);
    if (!x0) x0 = sqrt_mod_prime((a.c0 - s) * half, p_);
    const Int x1 = a.c1 * mod_inv(2 * *x0, p_) % p_;
    root = Fe{*x0, x1};
  }
  if (!(sqr(*root) == a)) {
    throw MathError(ErrorCode::kInconsistentEigenvalue, "square root self-check failed");
  }
  return root;
}

Fe Field::random(std::mt19937_64& rng) const {
  return {random_below(rng, p_), degree_ == 2 ? random_below(rng, p_) : Int(0)};
}

std::string Field::to_string(const Fe& a) const {
  if (degree_ == 1 || a.c1 == 0) return to_decimal(a.c0);
  return to_decimal(a.c0) + "+" + to_decimal(a.c1) + "*u";
}

// --- CurveInstance -------------------------------------------------------

CurveInstance::CurveInstance(Field field, Fe a4, Fe a6, std::string catalog_id)
    : field_(std::move(field)),
      a4_(std::move(a4)),
      a6_(std::move(a6)),
      catalog_id_(std::move(catalog_id)) {
  const Field& F = field_;
  const Fe disc = F.add(F.mul(F.from_int(4), F.mul(a4_, F.sqr(a4_))),
                        F.mul(F.from_int(27), F.sqr(a6_)));
  if (F.is_zero(disc)) {
    throw MathError(ErrorCode::kSingularCurve, "4*a4^3 + 27*a6^2 = 0");
  }
}

Fe CurveInstance::rhs(const Fe& x) const {
  const Field& F = field_;
  return F.add(F.mul(F.add(F.sqr(x), a4_), x), a6_);
}

bool CurveInstance::contains(const Point& p) const {
  return p.infinity || field_.sqr(p.y) == rhs(p.x);
}

Point CurveInstance::neg(const Point& p) const {
  if (p.infinity) return p;
  return Point::affine(p.x, field_.neg(p.y));
}

Point CurveInstance::add(const Point& p, const Point& q) const {
  if (p.infinity) return q;
  if (q.infinity) return p;
  const Field& F = field_;
  Fe slope;
  if (p.x == q.x) {
    if (F.is_zero(F.add(p.y, q.y))) return Point::at_infinity();
    const Fe num = F.add(F.mul(F.from_int(3), F.sqr(p.x)), a4_);
    slope = F.div(num, F.add(p.y, p.y));
  } else {
    slope = F.div(F.sub(q.y, p.y), F.sub(q.x, p.x));
  }
  const Fe x3 = F.sub(F.sub(F.sqr(slope), p.x), q.x);
  const Fe y3 = F.sub(F.mul(slope, F.sub(p.x, x3)), p.y);
  return Point::affine(x3, y3);
}

Point CurveInstance::scalar_mul(const Int& m, const Point& p) const {
  if (m < 0) return neg(scalar_mul(-m, p));
  Point acc = Point::at_infinity();
  for (std::size_t bit = bit_length(m); bit-- > 0;) {
    acc = dbl(acc);
    if (boost::multiprecision::bit_test(m, static_cast<unsigned>(bit))) acc = add(acc, p);
  }
  return acc;
}

Point CurveInstance::msm(std::span<const Point> points, std::span<const Int> coeffs) const {
  if (points.size() != coeffs.size()) {
    throw MathError(ErrorCode::kDimensionMismatch, "msm needs one coefficient per point");
  }
  const std::size_t r = points.size();
  if (r > 8) throw MathError(ErrorCode::kInvalidArgument, "msm supports at most 8 points");
  std::vector<Point> base(r);
  std::vector<Int> k(r);
  std::size_t bits = 0;
  for (std::size_t i = 0; i < r; ++i) {
    base[i] = coeffs[i] < 0 ? neg(points[i]) : points[i];
    k[i] = abs(coeffs[i]);
    bits = std::max(bits, bit_length(k[i]));
  }
  // table[mask] = sum of base[i] over the bits of mask.
  std::vector<Point> table(std::size_t{1} << r);
  for (std::size_t mask = 1; mask < table.size(); ++mask) {
    const std::size_t low = mask & (~mask + 1);
    const auto i = static_cast<std::size_t>(__builtin_ctzll(low));
    table[mask] = add(table[mask ^ low], base[i]);
  }
  Point acc = Point::at_infinity();
  for (std::size_t bit = bits; bit-- > 0;) {
    acc = dbl(acc);
    std::size_t mask = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (boost::multiprecision::bit_test(k[i], static_cast<unsigned>(bit))) {
        mask |= std::size_t{1} << i;
      }
    }
    if (mask != 0) acc = add(acc, table[mask]);
  }
  return acc;
}

Point CurveInstance::random_point(std::mt19937_64& rng) const {
  for (;;) {
    const Fe x = field_.random(rng);
    if (auto y = field_.sqrt(rhs(x))) {
      return Point::affine(x, (rng() & 1) != 0 ? field_.neg(*y) : *y);
    }
  }
}

Point CurveInstance::random_point_of_order(std::mt19937_64& rng, const Int& N,
                                           const Int& cofactor) const {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Point p = scalar_mul(cofactor, random_point(rng));
    if (p.infinity) continue;
    if (!scalar_mul(N, p).infinity) {
      throw MathError(ErrorCode::kInvalidArgument,
                      "cofactor * N is not a multiple of the group exponent");
    }
    return p;
  }
  throw MathError(ErrorCode::kInvalidArgument, "no point of order " + to_decimal(N));
}

Int naive_count(const CurveInstance& curve) {
  const Field& F = curve.field();
  if (F.degree() != 1) {
    throw MathError(ErrorCode::kInvalidArgument, "naive_count works over prime fields only");
  }
  if (F.characteristic() >= (Int(1) << 26)) {
    throw MathError(ErrorCode::kTooLarge, "p >= 2^26");
  }
  const auto p = static_cast<std::uint64_t>(F.characteristic());
  const auto a = static_cast<std::uint64_t>(curve.a4().c0);
  const auto b = static_cast<std::uint64_t>(curve.a6().c0);
  std::vector<bool> square(p, false);
  for (std::uint64_t y = 1; y <= p / 2; ++y) square[y * y % p] = true;
  std::uint64_t count = 1;  // point at infinity
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t v = ((x * x % p + a) % p * x + b) % p;
    if (v == 0) {
      count += 1;
    } else if (square[v]) {
      count += 2;
    }
  }
  return Int(count);
}

// --- Endomorphism ----------------------------------------------------------

Endomorphism Endomorphism::identity(const Field& field) {
  return Endomorphism(Kind::kIdentity, field, QuadraticGenerator{2, 1});
}

Endomorphism Endomorphism::coordinate_map(const Field& field, Fe x_scale, Fe y_scale,
                                          QuadraticGenerator char_poly) {
  Endomorphism e(Kind::kCoordinateMap, field, std::move(char_poly));
  e.x_scale_ = std::move(x_scale);
  e.y_scale_ = std::move(y_scale);
  return e;
}

Endomorphism Endomorphism::twist_frobenius(const Field& field, Fe x_scale, Fe y_scale,
                                           QuadraticGenerator char_poly) {
  Endomorphism e(Kind::kTwistFrobenius, field, std::move(char_poly));
  e.x_scale_ = std::move(x_scale);
  e.y_scale_ = std::move(y_scale);
  return e;
}

Endomorphism Endomorphism::velu(const Field& field, std::vector<VeluTerm> terms, Fe u,
                                QuadraticGenerator char_poly) {
  Endomorphism e(Kind::kVeluComposite, field, std::move(char_poly));
  e.x_scale_ = field.sqr(u);
  e.y_scale_ = field.mul(e.x_scale_, u);
  e.terms_ = std::move(terms);
  return e;
}

Endomorphism Endomorphism::compose(const Endomorphism& outer, const Endomorphism& inner,
                                   QuadraticGenerator char_poly) {
  if (!(outer.field_ == inner.field_)) {
    throw MathError(ErrorCode::kInvalidArgument, "composing maps over different fields");
  }
  Endomorphism e(Kind::kComposite, outer.field_, std::move(char_poly));
  e.parts_ = {outer, inner};
  return e;
}

Point Endomorphism::operator()(const Point& p) const {
  if (p.infinity || kind_ == Kind::kIdentity) return p;
  const Field& F = field_;
  switch (kind_) {
    case Kind::kCoordinateMap:
      return Point::affine(F.mul(x_scale_, p.x), F.mul(y_scale_, p.y));
    case Kind::kTwistFrobenius:
      return Point::affine(F.mul(x_scale_, F.frobenius(p.x)),
                           F.mul(y_scale_, F.frobenius(p.y)));
    case Kind::kVeluComposite: {
      Fe X = p.x;
      Fe dX = F.one();  // dX/dx, so that Y = y * dX/dx
      for (const VeluTerm& t : terms_) {
        const Fe diff = F.sub(p.x, t.x);
        if (F.is_zero(diff)) return Point::at_infinity();
        const Fe inv1 = F.inv(diff);
        const Fe inv2 = F.sqr(inv1);
        const Fe inv3 = F.mul(inv2, inv1);
        X = F.add(X, F.add(F.mul(t.v, inv1), F.mul(t.u, inv2)));
        dX = F.sub(dX, F.add(F.mul(t.v, inv2), F.mul(F.add(t.u, t.u), inv3)));
      }
      return Point::affine(F.mul(x_scale_, X), F.mul(y_scale_, F.mul(p.y, dX)));
    }
    case Kind::kComposite: {
      Point q = p;
      for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) q = (*it)(q);
      return q;
    }
    case Kind::kIdentity:
      break;
  }
  return p;
}

bool satisfies_char_poly(const CurveInstance& curve, const Endomorphism& endo,
                         const Point& p) {
  const Point image = endo(p);
  const Point image2 = endo(image);
  const Point sum = curve.add(
      curve.sub(image2, curve.scalar_mul(endo.char_poly().trace, image)),
      curve.scalar_mul(endo.char_poly().norm, p));
  return sum.infinity;
}

bool check_char_poly(const CurveInstance& curve, const Endomorphism& endo,
                     std::mt19937_64& rng, int samples) {
  for (int i = 0; i < samples; ++i) {
    const Point p = curve.random_point(rng);
    if (!curve.contains(endo(p)) || !satisfies_char_poly(curve, endo, p)) return false;
  }
  return true;
}

Endomorphism velu_endo(const CurveInstance& curve, const Fe& kernel_x, int degree,
                       const QuadraticGenerator& target_charpoly) {
  const Field& F = curve.field();
  const Fe& A = curve.a4();
  const Fe& B = curve.a6();
  const Fe x0 = kernel_x;
  const Fe gx = F.add(F.mul(F.from_int(3), F.sqr(x0)), A);
  VeluTerm term{x0, F.zero(), F.zero()};
  if (degree == 2) {
    if (!F.is_zero(curve.rhs(x0))) {
      throw MathError(ErrorCode::kBadKernel, "x = " + F.to_string(x0) + " is not 2-torsion");
    }
    term.v = gx;
  } else if (degree == 3) {
    // 3-division polynomial 3x^4 + 6Ax^2 + 12Bx - A^2.
    const Fe x2 = F.sqr(x0);
    Fe psi3 = F.mul(F.from_int(3), F.sqr(x2));
    psi3 = F.add(psi3, F.mul(F.from_int(6), F.mul(A, x2)));
    psi3 = F.add(psi3, F.mul(F.from_int(12), F.mul(B, x0)));
    psi3 = F.sub(psi3, F.sqr(A));
    const Fe y2 = curve.rhs(x0);
    if (!F.is_zero(psi3) || F.is_zero(y2)) {
      throw MathError(ErrorCode::kBadKernel, "x = " + F.to_string(x0) + " is not 3-torsion");
    }
    term.v = F.add(gx, gx);
    term.u = F.mul(F.from_int(4), y2);
  } else {
    throw MathError(ErrorCode::kBadKernel, "only degrees 2 and 3 are supported");
  }
  const Fe v = term.v;
  const Fe w = F.add(term.u, F.mul(x0, term.v));
  const Fe A2 = F.sub(A, F.mul(F.from_int(5), v));
  const Fe B2 = F.sub(B, F.mul(F.from_int(7), w));
  if (F.is_zero(A) || F.is_zero(B) || F.is_zero(A2) || F.is_zero(B2)) {
    throw MathError(ErrorCode::kNoIsomorphism,
                    "quotient isomorphism for j in {0, 1728} is not supported");
  }
  // (X, Y) -> (s X, s u Y) with s = u^2 maps y^2 = x^3 + A2 x + B2 onto the curve
  // exactly when s^2 A2 = A and s^3 B2 = B.
  const Fe s = F.div(F.mul(B, A2), F.mul(A, B2));
  if (!(F.mul(F.sqr(s), A2) == A) || !(F.mul(F.mul(F.sqr(s), s), B2) == B)) {
    throw MathError(ErrorCode::kNoIsomorphism, "quotient curve is not isomorphic to E");
  }
  const auto u = F.sqrt(s);
  if (!u) {
    throw MathError(ErrorCode::kNoIsomorphism,
                    "quotient curve is a non-trivial twist of E over this field");
  }
  std::mt19937_64 rng(0xe11c);
  for (const Fe& candidate : {*u, F.neg(*u)}) {
    Endomorphism endo = Endomorphism::velu(F, {term}, candidate, target_charpoly);
    if (check_char_poly(curve, endo, rng)) return endo;
  }
  throw MathError(ErrorCode::kNoIsomorphism,
                  "neither sign of the isomorphism satisfies the target polynomial");
}

GlsSetup gls_setup(const CurveInstance& base) {
  const Field& F0 = base.field();
  if (F0.degree() != 1) {
    throw MathError(ErrorCode::kInvalidArgument, "GLS base curve must be over F_p");
  }
  const Int& p = F0.characteristic();
  const Int count = naive_count(base);
  const Int t0 = p + 1 - count;
  if (floor_mod(t0, p) == 0) {
    throw MathError(ErrorCode::kSupersingular, "t0 = " + to_decimal(t0));
  }
  const Field F = Field::quadratic(p);
  // Smallest v = k + u whose norm k^2 - ns is a non-residue.
  Fe v = F.gen();
  for (Int k = 0;; ++k) {
    v = F.element(k, 1);
    if (!F.is_square(v)) break;
  }
  const Fe a4 = F.mul(F.from_int(base.a4().c0), F.sqr(v));
  const Fe a6 = F.mul(F.from_int(base.a6().c0), F.mul(F.sqr(v), v));
  CurveInstance twist(F, a4, a6, base.catalog_id().empty() ? "" : base.catalog_id() + "'");
  twist.set_order((p - 1) * (p - 1) + t0 * t0);
  // psi(x, y) = (w^2 x^p, w^3 y^p) with w = v^((1-p)/2).
  const Fe w = F.pow(F.inv(v), (p - 1) / 2);
  const Fe w2 = F.sqr(w);
  Endomorphism psi =
      Endomorphism::twist_frobenius(F, w2, F.mul(w2, w), QuadraticGenerator{t0, p});
  return GlsSetup{std::move(twist), std::move(psi), t0, v};
}

Endomorphism transport_to_twist(const Endomorphism& base_endo, const GlsSetup& setup) {
  if (base_endo.kind() != Endomorphism::Kind::kCoordinateMap) {
    throw MathError(ErrorCode::kInvalidArgument,
                    "only coordinate-map endomorphisms transport to the twist");
  }
  // Scalars commute with the twisting isomorphism, so the formulas are unchanged.
  const Field& F = setup.twist.field();
  return Endomorphism::coordinate_map(F, F.element(base_endo.x_scale().c0, 0),
                                      F.element(base_endo.y_scale().c0, 0),
                                      base_endo.char_poly());
}

Int resolve_eigenvalue(const CurveInstance& curve, const Endomorphism& endo,
                       const Point& p, const Int& N) {
  const Int& t = endo.char_poly().trace;
  const Int& n = endo.char_poly().norm;
  std::vector<Int> roots;
  if (N == 2) {
    for (int r = 0; r < 2; ++r) {
      if (floor_mod(Int(r * r) - t * r + n, 2) == 0) roots.emplace_back(r);
    }
  } else {
    const auto s = sqrt_mod_prime(t * t - 4 * n, N);
    if (s) {
      const Int half = mod_inv(2, N);
      roots.push_back(floor_mod((t + *s) * half, N));
      roots.push_back(floor_mod((t - *s) * half, N));
    }
  }
  if (roots.empty()) {
    throw MathError(ErrorCode::kNoRoot, "characteristic polynomial has no root mod " +
                                            to_decimal(N));
  }
  const Point image = endo(p);
  for (const Int& lambda : roots) {
    if (curve.scalar_mul(lambda, p) == image) return lambda;
  }
  throw MathError(ErrorCode::kInconsistentEigenvalue,
                  "endomorphism does not act as any root of its polynomial");
}

Point decomposed_mul(const CurveInstance& curve, const Int& m, const Point& p,
                     const Basis& basis, const DecompositionProblem& problem,
                     std::span<const Endomorphism> endos) {
  if (endos.size() + 1 != problem.dimension()) {
    throw MathError(ErrorCode::kDimensionMismatch,
                    "need one endomorphism per non-trivial eigenvalue");
  }
  const Decomposition a = babai_decompose(basis, problem, m);
  std::vector<Point> points;
  points.reserve(problem.dimension());
  points.push_back(p);
  for (const Endomorphism& e : endos) points.push_back(e(p));
  return curve.msm(points, a.coefficients);
}

}  // namespace shortbasis
