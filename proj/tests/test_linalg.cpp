#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "symcone/linalg.hpp"
#include "symcone/rational.hpp"

using namespace symcone;

TEST(RationalText, CanonicalForm) {
  EXPECT_EQ(to_string(Rational(0)), "0/1");
  EXPECT_EQ(to_string(Rational(-4, 6)), "-2/3");
  EXPECT_EQ(to_string(Rational(5)), "5/1");
}

TEST(RationalText, ParseAcceptsFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational(" 12/4 "), Rational(3));
  EXPECT_EQ(parse_rational("123456789012345678901234567890/3"),
            Rational(Integer("41152263004115226300411522630")));
}

TEST(RationalText, ParseRejectsGarbage) {
  EXPECT_THROW(parse_rational(""), DomainError);
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("1/-2"), DomainError);
  EXPECT_THROW(parse_rational("1.5"), DomainError);
  EXPECT_THROW(parse_rational("x"), DomainError);
  EXPECT_THROW(parse_rational("1/2/3"), DomainError);
}

TEST(RationalText, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational q = oracle::random_rational(rng, 1000, 97);
    EXPECT_EQ(parse_rational(to_string(q)), q);
  }
}

TEST(Linalg, RankMatchesOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = 1 + trial % 5, cols = 1 + (trial / 5) % 5;
    MatrixXq m(rows, cols);
    for (int i = 0; i < rows; ++i) m.row(i) = oracle::random_vector(rng, cols, 2).transpose();
    if (trial % 3 == 0 && rows > 1) m.row(rows - 1) = m.row(0) * Rational(3, 2);
    EXPECT_EQ(rank(m), oracle::matrix_rank(m));
  }
}

TEST(Linalg, NullspaceIsKernel) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    MatrixXq m(3, 5);
    for (int i = 0; i < 3; ++i) m.row(i) = oracle::random_vector(rng, 5, 3).transpose();
    const MatrixXq k = nullspace(m);
    EXPECT_EQ(k.cols(), 5 - rank(m));
    EXPECT_TRUE((m * k).isZero());
    EXPECT_EQ(rank(k), k.cols());
  }
}

TEST(Linalg, BareissAgreesWithCofactorExpansion) {
  std::mt19937_64 rng(13);
  auto cofactor = [](auto&& self, const MatrixXq& a) -> Rational {
    const auto n = a.rows();
    if (n == 1) return a(0, 0);
    Rational total = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      MatrixXq minor(n - 1, n - 1);
      for (Eigen::Index i = 1; i < n; ++i)
        for (Eigen::Index k = 0, c = 0; k < n; ++k)
          if (k != j) minor(i - 1, c++) = a(i, k);
      total += (j % 2 ? -1 : 1) * a(0, j) * self(self, minor);
    }
    return total;
  };
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 5;
    MatrixXq m(n, n);
    for (int i = 0; i < n; ++i) m.row(i) = oracle::random_vector(rng, n, 4).transpose();
    if (trial % 4 == 0) m(0, 0) = 0;
    if (trial % 7 == 0 && n > 1) m.row(n - 1) = m.row(0);
    EXPECT_EQ(determinant(m), cofactor(cofactor, m));
  }
}

TEST(Linalg, SolveAndSingular) {
  MatrixXq a(2, 2);
  a << 1, 2, 2, 2;
  VectorXq b(2);
  b << 2, 0;
  const VectorXq x = solve(a, b);
  EXPECT_EQ(x(0), -2);
  EXPECT_EQ(x(1), 2);
  a << 1, 2, 2, 4;
  EXPECT_THROW(solve(a, b), DomainError);
}

TEST(Linalg, PrimitiveScaling) {
  VectorXq v(3);
  v << Rational(1, 2), Rational(-3, 4), 0;
  const VectorXq p = primitive(v);
  EXPECT_EQ(p(0), 2);
  EXPECT_EQ(p(1), -3);
  EXPECT_EQ(p(2), 0);
  EXPECT_TRUE(positively_parallel(p, v));
  EXPECT_FALSE(positively_parallel(p, VectorXq(-v)));
}
