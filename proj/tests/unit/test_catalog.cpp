#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "shortbasis/shortbasis.hpp"
#include "test_util.hpp"

using namespace shortbasis;

namespace {

// Smallest prime >= from in which `square` is a non-zero square.
Int prime_with_square(const Int& square, Int from) {
  for (Int p = from;; ++p) {
    if (is_prime(p) && legendre(square, p) == 1) return p;
  }
}

}  // namespace

TEST(Catalog, Entries) {
  EXPECT_EQ(catalog().size(), 6u);
  EXPECT_EQ(catalog_entry("j54000").char_poly, (QuadraticGenerator{0, 3}));
  EXPECT_EQ(catalog_entry("j-3375").char_poly, (QuadraticGenerator{1, 2}));
  EXPECT_MATH_ERROR(catalog_entry("j42"), ErrorCode::kInvalidArgument);
}

TEST(Catalog, J1728Example) {
  const Field F = Field::prime(13);
  const CurveInstance E = catalog_curve("j1728", F);
  const Endomorphism phi = catalog_endo("j1728", E);
  const Point P = Point::affine(F.from_int(2), F.from_int(6));
  ASSERT_TRUE(E.contains(P));
  const Point Q = phi(P);
  EXPECT_EQ(Q, Point::affine(F.from_int(11), F.from_int(9)));
  EXPECT_TRUE(E.contains(Q));
  EXPECT_EQ(phi(Q), E.neg(P));
}

TEST(Catalog, J0Example) {
  const Field F = Field::prime(13);
  const CurveInstance E = catalog_curve("j0", F);
  const Endomorphism phi = catalog_endo("j0", E);
  // zeta_3 in F_13 is 3 or 9 depending on the square root of -3 taken.
  EXPECT_TRUE(phi.x_scale() == F.from_int(3) || phi.x_scale() == F.from_int(9));
  EXPECT_EQ(F.pow(phi.x_scale(), 3), F.one());
  std::mt19937_64 rng(71);
  for (int i = 0; i < 10; ++i) {
    const Point P = E.random_point(rng);
    EXPECT_EQ(phi(phi(phi(P))), P);
  }
  EXPECT_MATH_ERROR(catalog_endo("j0", catalog_curve("j0", Field::prime(11))),
                    ErrorCode::kConstantMissing);
  EXPECT_MATH_ERROR(catalog_endo("j1728", catalog_curve("j1728", Field::prime(11))),
                    ErrorCode::kConstantMissing);
}

TEST(Catalog, EveryEndomorphismSatisfiesItsCharPoly) {
  std::mt19937_64 rng(72);
  for (const CatalogEntry& e : catalog()) {
    int done = 0;
    for (Int p = prime_with_square(e.needed_square, 500); done < 3;
         p = prime_with_square(e.needed_square, p + 1)) {
      CurveInstance E = [&] {
        try {
          return std::optional<CurveInstance>(catalog_curve(e.id, Field::prime(p)));
        } catch (const MathError&) {
          return std::optional<CurveInstance>();
        }
      }().value_or(catalog_curve("j1728", Field::prime(5)));
      if (E.catalog_id() != e.id) continue;
      const Endomorphism phi = catalog_endo(e.id, E);
      EXPECT_EQ(phi.char_poly(), e.char_poly);
      EXPECT_TRUE(check_char_poly(E, phi, rng)) << e.id << " p=" << p;
      const OrderInclusion frob = recover_frobenius(E, phi, rng);
      const QuadraticGenerator pi = image_generator(frob, phi.char_poly());
      EXPECT_EQ(pi.norm, p);
      EXPECT_EQ(p + 1 - pi.trace, naive_count(E)) << e.id << " p=" << p;
      ++done;
    }
  }
}

TEST(Catalog, PrintedTwoTorsionKernelIsNotAnEndomorphism) {
  const Int p = prime_with_square(-7, 1000);
  const Field F = Field::prime(p);
  const CurveInstance E = catalog_curve("j-3375", F);
  // Printed x = 2 becomes X = 2 - 1/4 = 7/4 on the short model.
  const Fe X = F.from_rat(Rat(7, 4));
  EXPECT_TRUE(F.is_zero(E.rhs(X)));
  EXPECT_MATH_ERROR(velu_endo(E, X, 2, {1, 2}), ErrorCode::kNoIsomorphism);
}

TEST(Catalog, J54000Kernel) {
  const Int p = prime_with_square(-3, 1000);
  const Field F = Field::prime(p);
  const CurveInstance E = catalog_curve("j54000", F);
  const Endomorphism phi = velu_endo(E, F.from_rat(Rat(45, 11)), 3, {0, 3});
  std::mt19937_64 rng(73);
  for (int i = 0; i < 20; ++i) {
    const Point P = E.random_point(rng);
    EXPECT_EQ(phi(phi(P)), E.neg(E.scalar_mul(3, P)));
  }
}

TEST(Catalog, BadCharacteristic) {
  EXPECT_MATH_ERROR(catalog_curve("j54000", Field::prime(11)), ErrorCode::kInvalidArgument);
  EXPECT_MATH_ERROR(catalog_curve("j1728", Field::prime(13), 0), ErrorCode::kInvalidArgument);
}
