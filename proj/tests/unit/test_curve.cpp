#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "shortbasis/shortbasis.hpp"
#include "test_util.hpp"

using namespace shortbasis;

namespace {

CurveInstance prime_curve(long long p, long long a4, long long a6) {
  const Field F = Field::prime(p);
  return CurveInstance(F, F.from_int(a4), F.from_int(a6));
}

Point sum_of_multiples(const CurveInstance& E, const std::vector<Point>& pts,
                       const std::vector<Int>& coeffs) {
  Point acc = Point::at_infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) acc = E.add(acc, E.scalar_mul(coeffs[i], pts[i]));
  return acc;
}

}  // namespace

TEST(Field, QuadraticArithmetic) {
  std::mt19937_64 rng(51);
  for (long long p : {3LL, 13LL, 1009LL, 65537LL}) {
    const Field F = Field::quadratic(p);
    EXPECT_EQ(legendre(F.nonresidue(), p), -1);
    for (int i = 0; i < 50; ++i) {
      const Fe a = F.random(rng), b = F.random(rng);
      EXPECT_EQ(F.mul(F.add(a, b), F.sub(a, b)), F.sub(F.sqr(a), F.sqr(b)));
      EXPECT_EQ(F.frobenius(a), F.pow(a, p));
      EXPECT_EQ(F.from_int(F.norm(a)), F.mul(a, F.frobenius(a)));
      if (!F.is_zero(a)) EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
      const Fe s = F.sqr(a);
      const auto r = F.sqrt(s);
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(F.sqr(*r), s);
    }
  }
  EXPECT_MATH_ERROR(Field::prime(13).inv(Field::prime(13).zero()), ErrorCode::kNotInvertible);
}

TEST(NaiveCount, Examples) {
  EXPECT_EQ(naive_count(prime_curve(5, 1, 0)), 4);
  EXPECT_EQ(naive_count(prime_curve(13, 1, 0)), 20);
  EXPECT_MATH_ERROR(prime_curve(5, 0, 0), ErrorCode::kSingularCurve);
}

TEST(NaiveCount, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 60; ++i) {
    const long long p = static_cast<long long>(random_prime(rng, 5, 600));
    const long long a4 = static_cast<long long>(rng() % p), a6 = static_cast<long long>(rng() % p);
    if ((4 * a4 * a4 % p * a4 + 27 * a6 * a6) % p == 0) continue;
    EXPECT_EQ(naive_count(prime_curve(p, a4, a6)), oracle::count_points(p, a4, a6));
  }
}

TEST(GroupLaw, ScalarMulMatchesRepeatedAddition) {
  const CurveInstance E = prime_curve(13, 1, 0);
  std::mt19937_64 rng(53);
  for (int k = 0; k < 5; ++k) {
    const Point P = E.random_point(rng);
    EXPECT_TRUE(E.scalar_mul(0, P).infinity);
    EXPECT_TRUE(E.scalar_mul(20, P).infinity);
    for (long long m = 0; m <= 25; ++m) {
      EXPECT_EQ(E.scalar_mul(m, P), oracle::repeated_add(E, m, P)) << m;
      EXPECT_EQ(E.scalar_mul(-m, P), E.neg(oracle::repeated_add(E, m, P)));
    }
  }
}

TEST(GroupLaw, Axioms) {
  std::mt19937_64 rng(54);
  for (const CurveInstance& E :
       {prime_curve(1009, 3, 7), CurveInstance(Field::quadratic(101), Field::quadratic(101).gen(),
                                               Field::quadratic(101).one())}) {
    for (int i = 0; i < 30; ++i) {
      const Point P = E.random_point(rng), Q = E.random_point(rng), R = E.random_point(rng);
      ASSERT_TRUE(E.contains(P));
      EXPECT_TRUE(E.contains(E.add(P, Q)));
      EXPECT_EQ(E.add(E.add(P, Q), R), E.add(P, E.add(Q, R)));
      EXPECT_EQ(E.add(P, Q), E.add(Q, P));
      EXPECT_TRUE(E.add(P, E.neg(P)).infinity);
      EXPECT_EQ(E.add(P, Point::at_infinity()), P);
      const Int a = random_between(rng, -1000, 1000), b = random_between(rng, -1000, 1000);
      EXPECT_EQ(E.scalar_mul(a + b, P), E.add(E.scalar_mul(a, P), E.scalar_mul(b, P)));
    }
  }
}

TEST(GroupLaw, MultiScalarMatchesNaiveSum) {
  std::mt19937_64 rng(55);
  const CurveInstance E = prime_curve(65537, 5, 11);
  const std::vector<Point> none;
  EXPECT_TRUE(E.msm(none, std::vector<Int>{}).infinity);
  for (std::size_t dim : {1u, 2u, 4u}) {
    for (int i = 0; i < 40; ++i) {
      std::vector<Point> pts;
      std::vector<Int> coeffs;
      for (std::size_t k = 0; k < dim; ++k) {
        pts.push_back(E.random_point(rng));
        coeffs.push_back(random_between(rng, -(Int(1) << 40), Int(1) << 40));
      }
      if (i == 0) std::fill(coeffs.begin(), coeffs.end(), Int(0));
      EXPECT_EQ(E.msm(pts, coeffs), sum_of_multiples(E, pts, coeffs));
    }
  }
}

TEST(GroupLaw, PointOfOrder) {
  std::mt19937_64 rng(56);
  const CurveInstance E = prime_curve(13, 1, 0);  // 20 = 4 * 5
  for (int i = 0; i < 10; ++i) {
    const Point P = E.random_point_of_order(rng, 5, 4);
    EXPECT_FALSE(P.infinity);
    EXPECT_TRUE(E.scalar_mul(5, P).infinity);
  }
}

TEST(GlsSetup, P13Example) {
  const CurveInstance base = prime_curve(13, 1, 0);
  const GlsSetup s = gls_setup(base);
  EXPECT_EQ(s.t0, -6);
  ASSERT_TRUE(s.twist.order().has_value());
  EXPECT_EQ(*s.twist.order(), 180);
  EXPECT_TRUE(s.psi(Point::at_infinity()).infinity);
  std::mt19937_64 rng(57);
  for (int i = 0; i < 20; ++i) {
    const Point P = s.twist.random_point(rng);
    EXPECT_TRUE(s.twist.add(s.psi(s.psi(P)), P).infinity);
    EXPECT_TRUE(s.twist.scalar_mul(180, P).infinity);
  }
}

TEST(GlsSetup, OrderIdentity) {
  std::mt19937_64 rng(58);
  for (int i = 0; i < 10; ++i) {
    const long long p = static_cast<long long>(random_prime(rng, 50, 400));
    const CurveInstance base = prime_curve(p, 1 + static_cast<long long>(rng() % (p - 1)),
                                           1 + static_cast<long long>(rng() % (p - 1)));
    const Int t0 = p + 1 - oracle::count_points(p, static_cast<long long>(base.a4().c0),
                                                static_cast<long long>(base.a6().c0));
    if (t0 == 0) {
      EXPECT_MATH_ERROR(gls_setup(base), ErrorCode::kSupersingular);
      continue;
    }
    const GlsSetup s = gls_setup(base);
    EXPECT_EQ(s.t0, t0);
    EXPECT_EQ(*s.twist.order(), (p - 1) * (p - 1) + t0 * t0);
    EXPECT_TRUE(check_char_poly(s.twist, s.psi, rng));
    for (int k = 0; k < 20; ++k)
      EXPECT_TRUE(s.twist.scalar_mul(*s.twist.order(), s.twist.random_point(rng)).infinity);
  }
}

TEST(ResolveEigenvalue, Examples) {
  std::mt19937_64 rng(59);
  const GlsSetup s = gls_setup(prime_curve(13, 1, 0));
  const Point P = s.twist.random_point_of_order(rng, 5, 36);
  EXPECT_EQ(resolve_eigenvalue(s.twist, Endomorphism::identity(s.twist.field()), P, 5), 1);
  const Int l = resolve_eigenvalue(s.twist, s.psi, P, 5);
  EXPECT_TRUE(l == 2 || l == 3);
  EXPECT_EQ(s.psi(P), s.twist.scalar_mul(l, P));
  EXPECT_MATH_ERROR(resolve_eigenvalue(s.twist, s.psi, P, 7), ErrorCode::kNoRoot);
}

TEST(DecomposedMul, GlsP13) {
  std::mt19937_64 rng(60);
  const auto inst = gls_curve_instance(prime_curve(13, 1, 0), rng);
  ASSERT_TRUE(inst.has_value());
  EXPECT_EQ(inst->lattice.problem.modulus(), 5);
  const auto& E = inst->curve;
  const Point& P = inst->point;
  EXPECT_TRUE(decomposed_mul(E, 0, P, inst->lattice.basis, inst->lattice.problem, inst->endos)
                  .infinity);
  EXPECT_EQ(decomposed_mul(E, 1, P, inst->lattice.basis, inst->lattice.problem, inst->endos), P);
  for (int i = 0; i < 100; ++i) {
    const Int m = random_between(rng, -(Int(1) << 64), Int(1) << 64);
    EXPECT_EQ(decomposed_mul(E, m, P, inst->lattice.basis, inst->lattice.problem, inst->endos),
              E.scalar_mul(m, P));
  }
}

TEST(DecomposedMul, EveryCurveBackedScheme) {
  std::mt19937_64 rng(61);
  std::vector<CurveBackedInstance> instances;
  for (const CatalogEntry& e : catalog()) {
    for (Int p = 1000; instances.size() < 20 && p < 100000; ++p) {
      if (!is_prime(p)) continue;
      try {
        auto inst = glv_curve_instance(e.id, p, rng);
        if (inst) {
          instances.push_back(std::move(*inst));
          break;
        }
      } catch (const MathError& err) {
        if (err.code() != ErrorCode::kConstantMissing && err.code() != ErrorCode::kInvalidArgument &&
            err.code() != ErrorCode::kSingularCurve)
          throw;
      }
    }
  }
  ASSERT_EQ(instances.size(), 6u);
  for (long long p : {1013LL, 2017LL}) {
    const auto g = gls_curve_instance(prime_curve(p, 2, 3), rng);
    if (g) instances.push_back(*g);
    const auto gg = glvgls_curve_instance(p, 3, rng);
    if (gg) instances.push_back(*gg);
  }
  ASSERT_GE(instances.size(), 8u);
  for (const auto& inst : instances) {
    const auto& E = inst.curve;
    for (const Endomorphism& endo : inst.endos) {
      EXPECT_TRUE(check_char_poly(E, endo, rng, 5));
      for (int k = 0; k < 5; ++k) {
        const Point P = E.random_point(rng), Q = E.random_point(rng);
        EXPECT_EQ(endo(E.add(P, Q)), E.add(endo(P), endo(Q)));
        EXPECT_TRUE(E.contains(endo(P)));
      }
    }
    for (int i = 0; i < 20; ++i) {
      const Int m = random_between(rng, 0, Int(1) << 80);
      EXPECT_EQ(decomposed_mul(E, m, inst.point, inst.lattice.basis, inst.lattice.problem,
                               inst.endos),
                E.scalar_mul(m, inst.point))
          << inst.lattice.basis.scheme << " " << E.catalog_id();
    }
  }
}

TEST(VeluEndo, BadKernel) {
  const CurveInstance E = prime_curve(1009, 1, 1);
  EXPECT_MATH_ERROR(velu_endo(E, E.field().zero(), 2, {0, 2}), ErrorCode::kBadKernel);
  EXPECT_MATH_ERROR(velu_endo(E, E.field().zero(), 3, {1, 3}), ErrorCode::kBadKernel);
  EXPECT_MATH_ERROR(velu_endo(E, E.field().zero(), 5, {1, 3}), ErrorCode::kBadKernel);
}
