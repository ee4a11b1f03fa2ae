#pragma once

// The six CM curves with cheap GLV endomorphisms, stored with the rational
// coefficients they are usually printed with and normalised to short
// Weierstrass form when instantiated over a concrete field.

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "shortbasis/curve.hpp"

namespace shortbasis {

struct CatalogEntry {
  std::string id;  // "j1728", "j0", "j-3375", "j8000", "j32768", "j54000"
  Int j_invariant;
  // y^2 = k3*x^3 + k2*x^2 + k1*x + k0 as printed. For j1728 and j0 the
  // curve parameter a multiplies k1 (resp. k0).
  Rat k3, k2, k1, k0;
  bool parametric = false;
  // The field must contain a square root of this integer.
  Int needed_square;
  QuadraticGenerator char_poly;
  // Isogeny kernel x = kernel_rational + kernel_radical * sqrt(needed_square)
  // in printed coordinates; degree 0 marks the coordinate-map endomorphisms.
  int degree = 0;
  Rat kernel_rational;
  Rat kernel_radical;
};

const std::vector<CatalogEntry>& catalog();
// Throws kInvalidArgument for an unknown id.
const CatalogEntry& catalog_entry(std::string_view id);

// Short Weierstrass model of the entry over `field`. Throws kInvalidArgument
// when the characteristic divides a printed denominator and kSingularCurve
// when the reduction is singular.
CurveInstance catalog_curve(std::string_view id, const Field& field, const Int& a = 1);

// The entry's endomorphism on E (a curve built by catalog_curve). Throws
// kConstantMissing when the needed square root is absent from the field.
Endomorphism catalog_endo(std::string_view id, const CurveInstance& curve);

// Frobenius of E over a prime field written as c*phi + b. Every Cornacchia
// solution of t^2 - disc(phi)*c^2 = 4p and every sign choice is tested by
// checking that c*phi + b - 1 kills random points.
OrderInclusion recover_frobenius(const CurveInstance& curve, const Endomorphism& phi,
                                 std::mt19937_64& rng, int samples = 8);

}  // namespace shortbasis
