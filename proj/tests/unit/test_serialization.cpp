#include <gtest/gtest.h>

#include <random>

#include "shortbasis/shortbasis.hpp"
#include "test_util.hpp"

using namespace shortbasis;

TEST(Serialization, RoundTripAtLargeMagnitudes) {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 50; ++i) {
    const std::size_t r = 2 + rng() % 3;
    IntMatrix m(r, r);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        m(a, b) = random_between(rng, -(Int(1) << 256), Int(1) << 256);
    const Basis basis(m, "gls");
    std::vector<Int> eigen;
    const Int N = random_prime(rng, Int(1) << 200, Int(1) << 256);
    for (std::size_t k = 1; k < r; ++k) eigen.push_back(random_below(rng, N));
    const DecompositionProblem problem(N, eigen);

    const BasisDocument doc = parse_basis_json(basis_to_json(basis, problem));
    EXPECT_EQ(doc.basis.rows, m);
    EXPECT_EQ(doc.basis.scheme, "gls");
    ASSERT_TRUE(doc.problem.has_value());
    EXPECT_EQ(doc.problem->modulus(), N);
    EXPECT_EQ(doc.problem->eigenvalues(), problem.eigenvalues());

    const BasisDocument bare = parse_basis_json(basis_to_json(basis));
    EXPECT_EQ(bare.basis.rows, m);
    EXPECT_FALSE(bare.problem.has_value());
  }
}

TEST(Serialization, NumbersAreDecimalStrings) {
  const std::string text = basis_to_json(gls_basis(13, -6));
  EXPECT_NE(text.find("\"-12\""), std::string::npos);
  EXPECT_NE(text.find("\"modulus\": null"), std::string::npos);
}

TEST(Serialization, RejectsMalformedInput) {
  EXPECT_MATH_ERROR(parse_basis_json("not json"), ErrorCode::kInvalidArgument);
  EXPECT_MATH_ERROR(parse_basis_json(R"({"rows": [["1", "2"]]})"), ErrorCode::kInvalidArgument);
  EXPECT_MATH_ERROR(parse_basis_json(R"({"rows": [[1, 0], [0, 1]]})"), ErrorCode::kInvalidArgument);
  EXPECT_MATH_ERROR(parse_basis_json(R"({"rows": [["1x", "0"], ["0", "1"]]})"),
                    ErrorCode::kInvalidArgument);
}
