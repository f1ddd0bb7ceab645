#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symcone/diagonals.hpp"

using namespace symcone;

namespace {

TautClass make(RingContext ctx, int codim, std::initializer_list<Rational> c) {
  VectorXq v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (const auto& q : c) v(i++) = q;
  return {ctx, codim, v};
}

// partitions of d into exactly n parts
std::vector<Partition> exact_parts(int d, int n) {
  std::vector<Partition> out;
  for (const auto& p : enumerate_partitions(d, n))
    if (p.size() == n) out.push_back(p);
  return out;
}

Partition hook(int d, int n) {
  std::vector<int> b(static_cast<std::size_t>(d - n), 1);
  b[0] = n + 1;
  return Partition(std::move(b));
}

}  // namespace

TEST(DiagonalSpec, Validation) {
  EXPECT_THROW(DiagonalSpec(RingContext(2, 3), Partition({2, 2})), DomainError);
  EXPECT_THROW(DiagonalSpec(RingContext(2, 3), Partition({1, 1, 1})), DomainError);
  EXPECT_EQ(DiagonalSpec(RingContext(2, 5), Partition({3, 1, 1})).n, 3);
}

TEST(DiagonalClass, Examples) {
  EXPECT_EQ(diagonal_class({RingContext(2, 3), Partition({2, 1})}), make({2, 3}, 1, {8, -2}));
  EXPECT_EQ(diagonal_class({RingContext(2, 3), Partition({3})}), make({2, 3}, 2, {15, -6}));
  EXPECT_EQ(diagonal_class({RingContext(1, 4), Partition({2, 1, 1})}), make({1, 4}, 1, {16, -4}));
}

TEST(DiagonalClass, SmallAndNextToSmallFamilies) {
  // the whole diagonal and the (2,1,...,1) diagonal in closed form
  for (int g = 1; g <= 5; ++g)
    for (int d = 2; d <= 9; ++d) {
      const RingContext ctx(g, d);
      const TautClass small = diagonal_class({ctx, Partition({d})});
      const int r = ctx.rank_bound(d - 1);
      VectorXq want = VectorXq::Zero(r + 1);
      want(0) = d * (1 + g * (d - 1));
      if (r >= 1) want(1) = -d * (d - 1);
      EXPECT_EQ(small.coeffs(), want);
      if (d >= 3) {
        std::vector<int> a(static_cast<std::size_t>(d - 1), 1);
        a[0] = 2;
        const TautClass next = diagonal_class({ctx, Partition(a)});
        EXPECT_EQ(next, make(ctx, 1, {2 * oracle::fact(d - 2) * (d - 1 + g), -2 * oracle::fact(d - 2)}));
      }
    }
}

TEST(DiagonalClass, PairingsMatchPullbackDegrees) {
  for (int g = 1; g <= 5; ++g)
    for (int d = 2; d <= 10; ++d)
      for (int n = 1; n <= d - 1; ++n) {
        const RingContext ctx(g, d);
        for (const auto& a : exact_parts(d, n)) {
          const TautClass c = diagonal_class({ctx, a});
          ASSERT_EQ(c.codim(), d - n);
          for (int k = 0; k <= ctx.rank_bound(n); ++k) {
            VectorXq mono = VectorXq::Zero(ctx.rank_bound(n) + 1);
            mono(k) = 1;
            ASSERT_EQ(oracle::pair_coeffs(g, c.coeffs(), mono), oracle::diagonal_degree(g, a.parts(), k))
                << g << " " << d << " " << n << " k=" << k;
          }
        }
      }
}

TEST(NormalizedDiagonal, Examples) {
  EXPECT_EQ(normalized_diagonal({2, 3}, 1, Partition({2})), make({2, 3}, 2, {5, -2}));
  EXPECT_EQ(normalized_diagonal({2, 3}, 2, Partition({1})), make({2, 3}, 1, {4, -1}));
  EXPECT_EQ(normalized_diagonal({1, 2}, 1, Partition({1})), make({1, 2}, 1, {2, -1}));
  EXPECT_THROW(normalized_diagonal({2, 5}, 2, Partition({1, 1, 1})), DomainError);
  EXPECT_THROW(normalized_diagonal({2, 5}, 2, Partition({2})), DomainError);
}

TEST(WBasis, ExamplesAndTriangularity) {
  for (int g = 1; g <= 6; ++g)
    for (int d = 2; d <= 11; ++d)
      for (int n = 0; n <= d; ++n) {
        const RingContext ctx(g, d);
        const WBasis w = w_basis(ctx, n);
        const int r = ctx.rank_bound(d - n);
        ASSERT_EQ(static_cast<int>(w.vectors.size()), r + 1);
        for (int s = 0; s <= r; ++s) {
          EXPECT_EQ(w.vectors[static_cast<std::size_t>(s)].coeff(s), (s % 2 ? -1 : 1) * oracle::fact(n - s));
          for (int a = s + 1; a <= r; ++a) EXPECT_EQ(w.vectors[static_cast<std::size_t>(s)].coeff(a), 0);
        }
        EXPECT_EQ(w.vectors[0], TautClass::basis(ctx, d - n, 0) * oracle::fact(n));
        if (r >= 1) {
          VectorXq w1 = VectorXq::Zero(r + 1);
          w1(0) = g * oracle::fact(n - 1);
          w1(1) = -oracle::fact(n - 1);
          EXPECT_EQ(w.vectors[1].coeffs(), w1);
        }
      }
}

TEST(WBasis, SmallExample) {
  const RingContext ctx(2, 3);
  const WBasis w = w_basis(ctx, 1);
  EXPECT_EQ(w.vectors[0] + w.vectors[1] * 2, make(ctx, 2, {5, -2}));
  EXPECT_THROW(w_basis(ctx, 4), DomainError);
}

TEST(WCoords, Examples) {
  const WBasis b23 = w_basis({2, 3}, 1);
  const VectorXq c = to_w_coords(normalized_diagonal({2, 3}, 1, Partition({2})), b23);
  EXPECT_EQ(c, (VectorXq(2) << 1, 2).finished());
  for (std::size_t s = 0; s < b23.vectors.size(); ++s) {
    VectorXq e = VectorXq::Zero(static_cast<Eigen::Index>(b23.vectors.size()));
    e(static_cast<Eigen::Index>(s)) = 1;
    EXPECT_EQ(to_w_coords(b23.vectors[s], b23), e);
  }
  const WBasis b24 = w_basis({2, 4}, 2);
  EXPECT_EQ(to_w_coords(normalized_diagonal({2, 4}, 2, Partition({1, 1})), b24), (VectorXq(3) << 1, 2, 1).finished());
  EXPECT_THROW(to_w_coords(TautClass::basis({2, 4}, 1, 0), b24), DomainError);
}

TEST(WCoords, SigmaLaw) {
  for (int g = 1; g <= 6; ++g)
    for (int d = 2; d <= 12; ++d)
      for (int n = 1; n <= d - 1; ++n) {
        const RingContext ctx(g, d);
        const WBasis w = w_basis(ctx, n);
        const int r = ctx.rank_bound(n);
        for (const auto& lambda : enumerate_partitions(d - n, n)) {
          const TautClass del = normalized_diagonal(ctx, n, lambda);
          const VectorXq coords = to_w_coords(del, w);
          ASSERT_EQ(coords.size(), r + 1);
          for (int s = 0; s <= r; ++s) ASSERT_EQ(coords(s), oracle::subset_sigma(lambda.parts(), s));
          TautClass back = TautClass::zero(ctx, d - n);
          for (int s = 0; s <= r; ++s) back = back + w.vectors[static_cast<std::size_t>(s)] * coords(s);
          ASSERT_EQ(back, del);
        }
      }
}

TEST(Eta, Examples) {
  EXPECT_EQ(eta_class({2, 3}, 1), make({2, 3}, 1, {6, -1}));
  EXPECT_EQ(eta_class({1, 2}, 1), make({1, 2}, 1, {2, -1}));
  EXPECT_EQ(eta_class({3, 10}, 5), make({3, 10}, 5, {6, -1, 0, 0}));
  EXPECT_THROW(eta_class({2, 3}, 3), DomainError);
  EXPECT_THROW(eta_class({2, 3}, 0), DomainError);
  EXPECT_EQ(eta_pair_diagonal({RingContext(2, 3), Partition({3})}), 0);
  EXPECT_EQ(eta_pair_diagonal({RingContext(2, 3), Partition({2, 1})}), 0);
  EXPECT_EQ(eta_pair_diagonal({RingContext(4, 7), Partition({3, 2, 2})}), 0);
}

TEST(Eta, VanishesOnEveryDiagonal) {
  for (int g = 1; g <= 6; ++g)
    for (int d = 2; d <= 12; ++d)
      for (int n = 1; n <= d - 1; ++n)
        for (const auto& a : exact_parts(d, n)) {
          const DiagonalSpec spec(RingContext(g, d), a);
          ASSERT_EQ(eta_pair_diagonal(spec), 0) << g << " " << d << " " << n;
          const Rational by_degrees = Rational(d * g, n) * oracle::diagonal_degree(g, a.parts(), 0) -
                                      oracle::diagonal_degree(g, a.parts(), 1);
          ASSERT_EQ(by_degrees, 0);
        }
}

TEST(PushPull, Examples) {
  const RingContext c23(2, 3);
  MonomialSum x2theta(c23, 3);
  x2theta.add(1, 1);
  EXPECT_EQ(push_up(reduce(x2theta)), TautClass::basis({2, 4}, 3, 0) * 2);
  EXPECT_EQ(push_up(TautClass::basis({2, 2}, 1, 0)), TautClass::basis({2, 3}, 1, 0) * 2);
  EXPECT_EQ(push_up(eta_class({2, 2}, 1)), make({2, 3}, 1, {6, -1}));
  EXPECT_EQ(pull_down(TautClass::basis(c23, 2, 1)), make({2, 2}, 1, {2, 1}));
  for (int al = 1; al <= 4; ++al)
    EXPECT_EQ(pull_down(TautClass::basis({3, 5}, al, 0)), TautClass::basis({3, 4}, al - 1, 0) * al);
  EXPECT_THROW(pull_down(TautClass::basis(c23, 0, 0)), DomainError);
}

TEST(PushPull, Adjunction) {
  for (int g = 1; g <= 5; ++g)
    for (int d = 2; d <= 10; ++d) {
      const RingContext lo(g, d), hi(g, d + 1);
      for (int m = 0; m <= d; ++m)
        for (int a = 0; a <= lo.rank_bound(m); ++a)
          for (int b = 0; b <= hi.rank_bound(d + 1 - m); ++b) {
            const TautClass z = TautClass::basis(lo, m, a);
            const TautClass w = TautClass::basis(hi, d + 1 - m, b);
            ASSERT_EQ(pair(push_up(z), w), pair(z, pull_down(w))) << g << " " << d << " " << m;
          }
    }
}

TEST(PushPull, IterationIdentities) {
  for (int g = 1; g <= 5; ++g)
    for (int e = 2; e <= 10; ++e)
      for (int m = 1; m <= e - 1; ++m)
        EXPECT_EQ(push_up(eta_class({g, e}, m)), eta_class({g, e + 1}, m) * (e - m));
  for (int g = 1; g <= 5; ++g)
    for (int n = 1; n + 1 <= 10; ++n)
      for (int d = n + 1; d <= 10; ++d) {
        TautClass eta = eta_class({g, n + 1}, n);
        TautClass x = TautClass::basis({g, n + 1}, n, 0);
        for (int k = 0; k < d - n - 1; ++k) {
          eta = push_up(eta);
          x = push_up(x);
        }
        EXPECT_EQ(eta, eta_class({g, d}, n) * oracle::fact(d - n - 1));
        EXPECT_EQ(x, TautClass::basis({g, d}, n, 0) * oracle::fact(d - n));
      }
}

TEST(DivisorConstant, Examples) {
  EXPECT_EQ(divisor_constant({1, 5}), 0);
  EXPECT_EQ(divisor_constant({2, 2}), 1);
  EXPECT_EQ(divisor_constant({2, 3}), Rational(1, 4));
  for (int g = 1; g <= 8; ++g) {
    const RingContext ctx(g, 2);
    EXPECT_EQ(eta_class(ctx, 1) - TautClass::basis(ctx, 1, 0) * divisor_constant(ctx), make(ctx, 1, {g + 1, -1}));
    EXPECT_EQ(normalized_diagonal(ctx, 1, Partition({1})), make(ctx, 1, {g + 1, -1}));
    for (int d = 2; d <= 12; ++d) EXPECT_EQ(divisor_constant({g, d}) == 0, g == 1);
  }
}

TEST(EtaIdentities, TopDegreeDecomposition) {
  EXPECT_TRUE(top_eta_identity_check({2, 2}));
  EXPECT_TRUE(top_eta_identity_check({5, 3}));
  EXPECT_TRUE(top_eta_identity_check({1, 4}));
  for (int g = 1; g <= 6; ++g)
    for (int d = 2; d <= 12; ++d) EXPECT_TRUE(top_eta_identity_check({g, d})) << g << " " << d;
}

TEST(EtaIdentities, HookDecompositionReportsTheStatedIdentity) {
  EXPECT_TRUE(eta_decomposition_check({2, 3}, 1));
  EXPECT_THROW(eta_decomposition_check({2, 3}, 3), DomainError);
  for (int g = 1; g <= 6; ++g)
    for (int d = 2; d <= 12; ++d)
      for (int n = 1; n <= d - 1; ++n) {
        const Partition b = hook(d, n);
        const int r = RingContext(g, d).rank_bound(n);
        bool holds = true;
        for (int k = 0; k <= r; ++k) {
          const Rational lhs = Rational(d * g, n) * oracle::degree(g, k) - oracle::degree(g, k + 1);
          const Rational rhs = Rational((d - n) * (g - 1), n) * oracle::degree(g, k) +
                               oracle::diagonal_degree(g, b.parts(), k) / ((n + 1) * oracle::fact(d - n - 1));
          if (lhs != rhs) holds = false;
        }
        EXPECT_EQ(eta_decomposition_check({g, d}, n), holds) << g << " " << d << " " << n;
        if (n == 1) EXPECT_TRUE(holds);
      }
}

TEST(EtaIdentities, HookDecompositionWithFactorN) {
  // n eta = (d-n)(g-1) x^n + [hook] / ((n+1)(d-n-1)!)
  for (int g = 1; g <= 6; ++g)
    for (int d = 2; d <= 12; ++d)
      for (int n = 1; n <= d - 1; ++n) {
        const RingContext ctx(g, d);
        const TautClass hook_class = diagonal_class({ctx, hook(d, n)});
        const TautClass rhs = TautClass::basis(ctx, n, 0) * Rational((d - n) * (g - 1)) +
                              hook_class * (Rational(1) / ((n + 1) * oracle::fact(d - n - 1)));
        EXPECT_EQ(eta_class(ctx, n) * n, rhs) << g << " " << d << " " << n;
      }
}

TEST(CrossPairing, HookIsNegativeAgainstEveryDiagonal) {
  const RingContext c23(2, 3);
  EXPECT_EQ(pair(diagonal_class({c23, Partition({3})}), diagonal_class({c23, Partition({2, 1})})), -12);
  for (int g = 2; g <= 6; ++g)
    for (int d = 2; d <= 10; ++d)
      for (int n = 1; n <= d - 1; ++n) {
        const RingContext ctx(g, d);
        const TautClass hb = diagonal_class({ctx, hook(d, n)});
        for (const auto& a : exact_parts(d, n))
          EXPECT_LT(pair(diagonal_class({ctx, a}), hb), 0) << g << " " << d << " " << n;
      }
}

TEST(GenusOne, AllDiagonalsOnOneRay) {
  for (int d = 2; d <= 12; ++d)
    for (int n = 1; n <= d - 1; ++n) {
      const RingContext ctx(1, d);
      const TautClass ray = make(ctx, d - n, {d, -(d - n)});
      for (const auto& a : exact_parts(d, n)) {
        const TautClass c = diagonal_class({ctx, a});
        const Rational k = c.coeff(0) / d;
        EXPECT_GT(k, 0);
        EXPECT_EQ(c, ray * k);
      }
    }
}
