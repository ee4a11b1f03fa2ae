#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "shortbasis/shortbasis.hpp"
#include "test_util.hpp"

using namespace shortbasis;

namespace {

bool all_rows_member(const Basis& b, const DecompositionProblem& problem) {
  for (std::size_t i = 0; i < b.dimension(); ++i) {
    if (!membership(b.row(i), problem)) return false;
  }
  return true;
}

double to_double(const Rat& x) {
  return x.num().convert_to<double>() / x.den().convert_to<double>();
}

}  // namespace

TEST(LongBasis, Examples) {
  EXPECT_EQ(long_basis(DecompositionProblem(5, {2})).rows, (IntMatrix{{5, 0}, {-2, 1}}));
  EXPECT_EQ(long_basis(DecompositionProblem(7, {})).rows, (IntMatrix{{7}}));
  const Basis b = long_basis(DecompositionProblem(5, {2, 3, 1}));
  EXPECT_EQ(b.dimension(), 4u);
  EXPECT_EQ(basis_det(b), 5);
}

TEST(Ec2dBasis, Examples) {
  ASSERT_EQ(oracle::count_points(13, 1, 0), 20);
  const Basis b = ec2d_basis(-3, 2, {0, 1});
  EXPECT_EQ(b.rows, (IntMatrix{{-4, 2}, {2, 4}}));
  EXPECT_EQ(abs(basis_det(b)), 20);
  EXPECT_MATH_ERROR(ec2d_basis(5, 0, {0, 1}), ErrorCode::kDegenerateInclusion);
}

TEST(Ec2dBasis, J1728Shape) {
  for (long long t = -40; t <= 40; t += 2) {
    for (long long c = 1; c < 30; ++c) {
      const Basis b = ec2d_basis(t / 2, c, {0, 1});
      EXPECT_EQ(b.rows, (IntMatrix{{t / 2 - 1, c}, {c, 1 - t / 2}}));
    }
  }
}

TEST(Ec2dBasis, DeterminantIsCharpolyAtOne) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    const QuadraticGenerator phi{random_between(rng, -3, 3), random_between(rng, 1, 5)};
    const OrderInclusion inc{random_between(rng, -(Int(1) << 100), Int(1) << 100),
                             random_between(rng, 1, Int(1) << 100)};
    const QuadraticGenerator pi = image_generator(inc, phi);
    EXPECT_EQ(abs(basis_det(ec2d_basis(inc.b, inc.c, phi))), abs(1 + pi.norm - pi.trace));
  }
}

TEST(GlsBasis, Examples) {
  ASSERT_EQ(13 + 1 - oracle::count_points(13, 1, 0), -6);
  EXPECT_EQ(gls_basis(13, -6).rows, (IntMatrix{{12, 6}, {6, -12}}));
  EXPECT_MATH_ERROR(gls_basis(5, 30), ErrorCode::kWeilViolation);
  EXPECT_MATH_ERROR(gls_basis(5, 0), ErrorCode::kWeilViolation);
}

TEST(GlsBasis, OrthogonalWithExpectedDeterminantAndSize) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 300; ++i) {
    const Int p = random_prime(rng, 1 << 10, Int(1) << 128);
    const Int bound = isqrt(4 * p);
    Int t0 = random_between(rng, -bound, bound);
    if (t0 == 0) t0 = 1;
    const Basis b = gls_basis(p, t0);
    EXPECT_EQ(dot(b.rows.row(0), b.rows.row(1)), 0);
    EXPECT_EQ(abs(basis_det(b)), (p - 1) * (p - 1) + t0 * t0);
    EXPECT_LE(norm_bits(b), bit_length(p));
  }
}

TEST(QCurveBasis, Examples) {
  const Basis plus = qcurve_basis(5, 2, +1, 2);
  EXPECT_EQ(plus.rows, (IntMatrix{{-6, 2}, {-4, 6}}));
  EXPECT_EQ(abs(basis_det(plus)), 28);
  EXPECT_EQ(qcurve_trace(5, 2, +1, 2), -2);
  const Basis minus = qcurve_basis(5, 2, -1, 2);
  EXPECT_EQ(minus.rows, (IntMatrix{{4, 2}, {4, -4}}));
  EXPECT_EQ(abs(basis_det(minus)), 24);
  // (5, 7, +1, 1) has t_E = -3 and is valid; r = 2 pushes t_E to 18 > 2p.
  EXPECT_NO_THROW(qcurve_basis(5, 7, +1, 1));
  EXPECT_MATH_ERROR(qcurve_basis(5, 7, +1, 2), ErrorCode::kWeilViolation);
  EXPECT_MATH_ERROR(qcurve_basis(5, 2, 3, 2), ErrorCode::kInvalidArgument);
}

TEST(QCurveBasis, DeterminantAndMembership) {
  std::mt19937_64 rng(33);
  int tested = 0;
  for (int i = 0; i < 300; ++i) {
    const Int p = random_prime(rng, 1 << 10, 1 << 24);
    const Int d = random_between(rng, 1, 30);
    const int eps = (rng() & 1) ? 1 : -1;
    const Int r = random_between(rng, 1, isqrt(4 * p / d));
    const Basis b = qcurve_basis(p, d, eps, r);
    const Int det = abs(basis_det(b));
    EXPECT_EQ(det, p * p + 1 - qcurve_trace(p, d, eps, r));
    for (const auto& [N, e] : factor(det)) {
      if (N < 3 || (r * d) % N == 0) continue;
      // lambda_psi from the first row, then the squaring relation must hold.
      const Int l = floor_mod((1 + eps * p) * mod_inv(r, N), N);
      EXPECT_EQ(floor_mod(l * l - eps * d, N), 0);
      EXPECT_TRUE(all_rows_member(b, DecompositionProblem(N, {l})));
      ++tested;
    }
  }
  EXPECT_GT(tested, 100);
}

TEST(GlvGlsBasis, Examples) {
  const Basis b = glvgls_basis(-3, 2, {0, 1});
  EXPECT_EQ(basis_det(b), 180);
  EXPECT_EQ(oracle::cofactor_det(b.rows), 180);
  EXPECT_EQ(180, (13 - 1) * (13 - 1) + 36);
  EXPECT_EQ(abs(basis_det(glvgls_basis(-3, -2, {0, 1}))), 180);
  EXPECT_MATH_ERROR(glvgls_basis(0, 1, {0, 1}), ErrorCode::kDegenerateConfiguration);
}

TEST(GlvGlsBasis, RowsAreMembers) {
  std::mt19937_64 rng(34);
  int tested = 0;
  for (int i = 0; i < 200; ++i) {
    const OrderInclusion inc{random_between(rng, -1000, 1000), random_between(rng, 1, 1000)};
    const QuadraticGenerator phi{0, 1};
    const Basis b = glvgls_basis(inc.b, inc.c, phi);
    const Int det = abs(basis_det(b));
    EXPECT_EQ(det, abs(gi_norm(inc.b, inc.c, phi, 1, -1)));
    for (const auto& [N, e] : factor(det)) {
      if (N < 3 || inc.c % N == 0) continue;
      const auto i_root = sqrt_mod_prime(N - 1, N);
      if (!i_root) continue;
      for (const Int& lphi : {*i_root, Int(N - *i_root)}) {
        const Int lpsi = floor_mod(inc.c * lphi + inc.b, N);
        if (floor_mod(lpsi * lpsi + 1, N) != 0) continue;
        EXPECT_TRUE(all_rows_member(b, DecompositionProblem(N, {lphi, lpsi, lphi * lpsi})));
        ++tested;
      }
    }
  }
  EXPECT_GT(tested, 50);
}

TEST(GiBasis, Examples) {
  const Basis gi = gi_basis(5, 3, {0, 1}, 1, -1);
  const Basis glvgls = glvgls_basis(5, 3, {0, 1});
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(gi.rows(0, j), -glvgls.rows(0, j));

  // N = 7 admits lambda_psi = 3 with 3^2 = 2, but lambda_phi = (3 + 3)/2 = 3 is
  // not a square root of -1 mod 7, so the fourth row leaves the lattice.
  const Basis b = gi_basis(-3, 2, {0, 1}, 2, +1);
  const DecompositionProblem seven(7, {3, 3, 9});
  EXPECT_TRUE(membership(b.row(0), seven));
  EXPECT_TRUE(membership(b.row(2), seven));
  EXPECT_FALSE(membership(b.row(3), seven));
  // N must divide Norm(psi^2 - 2) = 153 = 9 * 17.
  EXPECT_EQ(abs(basis_det(b)), 153);
  EXPECT_EQ(gi_norm(-3, 2, {0, 1}, 2, +1), 153);
  const Int lphi = 13, lpsi = 6;  // 13^2 = -1, 2*13 - 3 = 6, 6^2 = 2 (mod 17)
  EXPECT_EQ((lphi * lphi + 1) % 17, 0);
  EXPECT_EQ((lpsi * lpsi - 2) % 17, 0);
  EXPECT_TRUE(all_rows_member(b, DecompositionProblem(17, {lphi, lpsi, lphi * lpsi})));

  // psi = phi: psi^2 = -1 makes the sign = -1, d = 1 configuration degenerate;
  // with sign = +1 the norm is Norm(-2) = 4.
  EXPECT_MATH_ERROR(gi_basis(0, 1, {0, 1}, 1, -1), ErrorCode::kDegenerateConfiguration);
  EXPECT_EQ(abs(basis_det(gi_basis(0, 1, {0, 1}, 1, +1))), 4);
  EXPECT_MATH_ERROR(gi_basis(0, 1, {0, 1}, 0, +1), ErrorCode::kInvalidArgument);
}

TEST(G2rmBasis, Examples) {
  const Basis b = g2rm_basis(7, 1, 1, {-1, -1});
  EXPECT_EQ(b.rows, (IntMatrix{{7, -1}, {6, 7}}));
  EXPECT_EQ(basis_det(b), 55);
  EXPECT_EQ(g2_cardinality(7, 1, -1), 55);
  EXPECT_TRUE(g2_validate(7, 1, -1));
  const Basis sqrt2 = g2rm_basis(101, 4, 3, {0, -2});
  EXPECT_EQ(sqrt2.rows(1, 0), -6);
  EXPECT_EQ(sqrt2.rows(1, 1), 101 + 1 - 4);
  EXPECT_MATH_ERROR(g2rm_basis(7, 1, 0, {-1, -1}), ErrorCode::kDegenerateInclusion);
}

TEST(G2Validate, Examples) {
  EXPECT_TRUE(g2_validate(7, 1, -1));
  EXPECT_FALSE(g2_validate(7, 30, 0));
  EXPECT_FALSE(g2_validate(7, 2, 1));
  EXPECT_MATH_ERROR(g2_validate(1, 0, 0), ErrorCode::kInvalidArgument);
}

TEST(G2Validate, MatchesFloatingPointAwayFromBoundaries) {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 3000; ++i) {
    const long long q = static_cast<long long>(random_between(rng, 2, 5000));
    const long long s = static_cast<long long>(random_between(rng, -300, 300));
    const long long n = static_cast<long long>(random_between(rng, -20000, 20000));
    const double rq = std::sqrt(static_cast<double>(q));
    const double margin = 1e-6;
    const double m1 = 4 * rq - std::abs(s), m2 = 4.0 * q - std::abs(n),
                 m3 = double(s) * s - 4.0 * n, m4 = n + 4.0 * q - 2 * std::abs(s) * rq;
    if (std::abs(m1) < margin || std::abs(m4) < margin || m2 == 0 || m3 == 0) continue;
    EXPECT_EQ(g2_validate(q, s, n), m1 > 0 && m2 >= 0 && m3 > 0 && m4 > 0) << q << " " << s << " " << n;
  }
}

TEST(G2rmBasis, DeterminantAndMembership) {
  std::mt19937_64 rng(36);
  for (int i = 0; i < 200; ++i) {
    const LatticeInstance inst = random_g2rm_lattice(rng, 20);
    const auto& g = std::get<G2rmScheme>(inst.scheme);
    EXPECT_EQ(abs(basis_det(inst.basis)), g2_cardinality(g.q, g.s, g.n_pi));
    const Int& N = inst.problem.modulus();
    const Int lphi = inst.problem.eigenvalues()[0];
    EXPECT_EQ(floor_mod(g.c * lphi + g.b - (g.q + 1), N), 0);
    EXPECT_TRUE(all_rows_member(inst.basis, inst.problem));
  }
}

TEST(BoundTrivial, Examples) {
  const TrivialBound t = bound_trivial(13, -6, {0, 1});
  EXPECT_EQ(t.c_abs, 2);
  EXPECT_EQ(t.b_bound, Rat(3));
  for (long long t0 : {-7, -3, 1, 5}) {
    const long long p = 13;
    const TrivialBound g = bound_trivial(p * p, 2 * p - t0 * t0, {t0, p});
    EXPECT_EQ(g.c_abs, std::abs(t0));
  }
  EXPECT_MATH_ERROR(bound_trivial(13, -6, {1, -1}), ErrorCode::kNotASquare);
}

TEST(BoundCsq, Examples) {
  for (long long N : {2LL, 5LL, 1000003LL, 1LL << 40}) {
    const double exact = 0.5 * std::log2(static_cast<double>(N)) + 0.5;
    const double got = to_double(bound_csq(N, {0, 1}));
    EXPECT_GE(got, exact - 1e-9);
    EXPECT_LE(got, exact + 1.0 / 16);
  }
  EXPECT_MATH_ERROR(bound_csq(101, {0, -2}), ErrorCode::kNonPositiveArg);
  EXPECT_MATH_ERROR(bound_csq(0, {0, 1}), ErrorCode::kNonPositiveArg);
  EXPECT_EQ(log2_sixteenths_ceil(1), 0);
  EXPECT_EQ(log2_sixteenths_ceil(2), 16);
  EXPECT_EQ(log2_sixteenths_ceil(3), 26);  // 16*log2(3) = 25.36
}

TEST(BoundCsq, GlsIsThreeQuartersOfLogQ) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 50; ++i) {
    const Int p = random_prime(rng, 1 << 10, Int(1) << 60);
    const Int bound = isqrt(4 * p);
    const Int t0 = random_between(rng, 1, bound);
    const Int N = (p - 1) * (p - 1) + t0 * t0;
    const double csq = to_double(bound_csq(N, {t0, p}));
    const double log2q = 2 * std::log2(p.convert_to<double>());
    EXPECT_NEAR(csq, 0.75 * log2q, 1.0);
  }
}

TEST(BuildBasis, ValidatesSchemes) {
  EXPECT_EQ(build_basis(GlsScheme{13, -6}).rows, gls_basis(13, -6).rows);
  EXPECT_EQ(build_basis(GlvScheme{13, "j1728", -3, 2, {0, 1}}).scheme, "glv");
  EXPECT_MATH_ERROR(build_basis(GlvScheme{17, "", -3, 2, {0, 1}}), ErrorCode::kNotIncluded);
  EXPECT_EQ(abs(basis_det(build_basis(GlvGlsScheme{13, -6, -3, 2, {0, 1}}))), 180);
  EXPECT_MATH_ERROR(build_basis(GlvGlsScheme{13, -4, -3, 2, {0, 1}}), ErrorCode::kNotIncluded);
  EXPECT_MATH_ERROR(build_basis(G2rmScheme{7, 30, 224, 15, 0, {-1, -1}}),
                    ErrorCode::kNotIncluded);
  EXPECT_EQ(scheme_name(QCurveScheme{5, 2, 1, 2}), "qcurve");
  EXPECT_EQ(glvgls_inclusion(13, -6, {0, 1}), (OrderInclusion{-3, 2}));
}
