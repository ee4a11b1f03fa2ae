#pragma once

// Desk-scale ground truth: F_p and F_{p^2} arithmetic, affine short
// Weierstrass curves, efficient endomorphisms and decomposed scalar
// multiplication. Correctness, not speed, is the goal here.

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "shortbasis/basis.hpp"
#include "shortbasis/quadratic_orders.hpp"

namespace shortbasis {

// Element of F_p or F_p[u]/(u^2 - ns); c1 is always 0 in F_p.
struct Fe {
  Int c0;
  Int c1;

  friend bool operator==(const Fe&, const Fe&) = default;
};

class Field {
 public:
  // F_p for an odd prime p.
  static Field prime(const Int& p);
  // F_{p^2} = F_p[u]/(u^2 - ns) with ns the smallest positive non-residue.
  static Field quadratic(const Int& p);

  const Int& characteristic() const { return p_; }
  int degree() const { return degree_; }
  const Int& nonresidue() const { return ns_; }
  Int order() const { return degree_ == 1 ? p_ : p_ * p_; }

  Fe zero() const { return {0, 0}; }
  Fe one() const { return {1, 0}; }
  Fe from_int(const Int& v) const { return {floor_mod(v, p_), 0}; }
  // Throws kInvalidArgument when p divides the denominator.
  Fe from_rat(const Rat& v) const;
  Fe element(const Int& c0, const Int& c1) const;
  // The generator u of F_{p^2} over F_p.
  Fe gen() const;

  bool is_zero(const Fe& a) const { return a.c0 == 0 && a.c1 == 0; }
  Fe add(const Fe& a, const Fe& b) const;
  Fe sub(const Fe& a, const Fe& b) const;
  Fe neg(const Fe& a) const;
  Fe mul(const Fe& a, const Fe& b) const;
  Fe sqr(const Fe& a) const { return mul(a, a); }
  Fe inv(const Fe& a) const;
  Fe div(const Fe& a, const Fe& b) const { return mul(a, inv(b)); }
  Fe pow(const Fe& a, const Int& e) const;
  // a^p.
  Fe frobenius(const Fe& a) const;
  // Norm down to F_p.
  Int norm(const Fe& a) const;

  bool is_square(const Fe& a) const;
  std::optional<Fe> sqrt(const Fe& a) const;

  Fe random(std::mt19937_64& rng) const;
  std::string to_string(const Fe& a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.degree_ == b.degree_ && a.ns_ == b.ns_;
  }

 private:
  Field(Int p, int degree, Int ns) : p_(std::move(p)), degree_(degree), ns_(std::move(ns)) {}

  Int p_;
  int degree_ = 1;
  Int ns_ = 0;
};

struct Point {
  bool infinity = true;
  Fe x{0, 0};
  Fe y{0, 0};

  static Point at_infinity() { return {}; }
  static Point affine(Fe x, Fe y) { return {false, std::move(x), std::move(y)}; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

// y^2 = x^3 + a4*x + a6.
class CurveInstance {
 public:
  // Throws kSingularCurve when 4*a4^3 + 27*a6^2 = 0.
  CurveInstance(Field field, Fe a4, Fe a6, std::string catalog_id = {});

  const Field& field() const { return field_; }
  const Fe& a4() const { return a4_; }
  const Fe& a6() const { return a6_; }
  const std::string& catalog_id() const { return catalog_id_; }
  const std::optional<Int>& order() const { return order_; }
  void set_order(Int order) { order_ = std::move(order); }

  Fe rhs(const Fe& x) const;
  bool contains(const Point& p) const;

  Point neg(const Point& p) const;
  Point add(const Point& p, const Point& q) const;
  Point dbl(const Point& p) const { return add(p, p); }
  Point sub(const Point& p, const Point& q) const { return add(p, neg(q)); }
  // Double-and-add; [0]P = infinity and [-m]P = -[m]P.
  Point scalar_mul(const Int& m, const Point& p) const;
  // Interleaved (Straus-Shamir) multi-scalar multiplication.
  Point msm(std::span<const Point> points, std::span<const Int> coeffs) const;

  Point random_point(std::mt19937_64& rng) const;
  // A uniformly random point of the subgroup of order N, where
  // #E = cofactor * N. Never the point at infinity.
  Point random_point_of_order(std::mt19937_64& rng, const Int& N, const Int& cofactor) const;

 private:
  Field field_;
  Fe a4_;
  Fe a6_;
  std::string catalog_id_;
  std::optional<Int> order_;
};

// #E(F_p) by summing quadratic characters over every x. p < 2^26.
Int naive_count(const CurveInstance& curve);

struct VeluTerm {
  Fe x;  // x-coordinate of a kernel point (one per pair +-Q)
  Fe v;
  Fe u;
};

class Endomorphism {
 public:
  enum class Kind { kIdentity, kCoordinateMap, kVeluComposite, kTwistFrobenius, kComposite };

  static Endomorphism identity(const Field& field);
  // (x, y) -> (sx*x, sy*y).
  static Endomorphism coordinate_map(const Field& field, Fe x_scale, Fe y_scale,
                                     QuadraticGenerator char_poly);
  // (x, y) -> (sx*x^p, sy*y^p).
  static Endomorphism twist_frobenius(const Field& field, Fe x_scale, Fe y_scale,
                                      QuadraticGenerator char_poly);
  // Velu isogeny with the given kernel terms followed by (X, Y) -> (s*X, s*u*Y)
  // where s = u^2.
  static Endomorphism velu(const Field& field, std::vector<VeluTerm> terms, Fe u,
                           QuadraticGenerator char_poly);
  // outer o inner; the caller supplies the characteristic polynomial.
  static Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner,
                              QuadraticGenerator char_poly);

  Kind kind() const { return kind_; }
  const QuadraticGenerator& char_poly() const { return char_poly_; }
  const Field& field() const { return field_; }
  const Fe& x_scale() const { return x_scale_; }
  const Fe& y_scale() const { return y_scale_; }
  const std::vector<VeluTerm>& kernel_terms() const { return terms_; }

  Point operator()(const Point& p) const;

 private:
  Endomorphism(Kind kind, Field field, QuadraticGenerator char_poly)
      : kind_(kind), field_(std::move(field)), char_poly_(std::move(char_poly)) {}

  Kind kind_;
  Field field_;
  QuadraticGenerator char_poly_;
  Fe x_scale_{1, 0};
  Fe y_scale_{1, 0};
  std::vector<VeluTerm> terms_;
  std::vector<Endomorphism> parts_;  // composite: applied back to front
};

// phi^2(P) - [t]phi(P) + [n]P == infinity.
bool satisfies_char_poly(const CurveInstance& curve, const Endomorphism& endo,
                         const Point& p);
// Checks satisfies_char_poly on `samples` random points.
bool check_char_poly(const CurveInstance& curve, const Endomorphism& endo,
                     std::mt19937_64& rng, int samples = 20);

// Velu quotient by the subgroup of order `degree` (2 or 3) whose
// x-coordinate is kernel_x, composed with the isomorphism back to `curve`,
// with the sign chosen so the map satisfies target_charpoly on 20 random points.
Endomorphism velu_endo(const CurveInstance& curve, const Fe& kernel_x, int degree,
                       const QuadraticGenerator& target_charpoly);

struct GlsSetup {
  CurveInstance twist;  // E' over F_{p^2}, with its order set
  Endomorphism psi;     // psi^2 = -1 on E'(F_{p^2})
  Int t0;               // Frobenius trace of the base curve
  Fe twist_element;     // v: a4' = a4*v^2, a6' = a6*v^3
};

// Quadratic twist of E0 x F_{p^2} with the twisted p-power Frobenius.
// Throws kSupersingular when t0 = 0 (mod p).
GlsSetup gls_setup(const CurveInstance& base);

// Moves a coordinate-map endomorphism of the base curve to the GLS twist.
Endomorphism transport_to_twist(const Endomorphism& base_endo, const GlsSetup& setup);

// The root lambda of endo's characteristic polynomial mod the prime N with
// endo(P) = [lambda]P. Throws kNoRoot / kInconsistentEigenvalue.
Int resolve_eigenvalue(const CurveInstance& curve, const Endomorphism& endo,
                       const Point& p, const Int& N);

// Babai-decomposes m against `basis` and evaluates
// [a_1]P + [a_2]endos[0](P) + ... with one multi-scalar multiplication.
Point decomposed_mul(const CurveInstance& curve, const Int& m, const Point& p,
                     const Basis& basis, const DecompositionProblem& problem,
                     std::span<const Endomorphism> endos);

}  // namespace shortbasis
