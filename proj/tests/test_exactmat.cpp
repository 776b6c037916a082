#include <gtest/gtest.h>

#include <random>

#include "binlat/exactmat.hpp"
#include "oracles.hpp"

using namespace binlat;

namespace {

IntMatrix diag_of(const SnfDecomposition& snf, std::size_t r, std::size_t c) {
  IntMatrix g(r, c);
  for (std::size_t i = 0; i < snf.rank; ++i) g(i, i) = snf.gamma[i];
  return g;
}

const IntMatrix kK3{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
const IntMatrix kTwoForOne{{4, -2, -1, -1}, {-1, 4, -2, -1}, {-1, -1, 3, -1}, {-1, -1, -1, 3}};

}  // namespace

TEST(Snf, Identity) {
  auto snf = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(snf.rank, 3u);
  EXPECT_EQ(snf.gamma, (std::vector<Integer>{1, 1, 1}));
}

TEST(Snf, DiagonalChainAlreadyHolds) {
  auto snf = smith_normal_form(IntMatrix{{2, 0}, {0, 4}});
  EXPECT_EQ(snf.gamma, (std::vector<Integer>{2, 4}));
}

TEST(Snf, DiagonalNeedsFixing) {
  auto snf = smith_normal_form(IntMatrix{{4, 0}, {0, 6}});
  EXPECT_EQ(snf.gamma, (std::vector<Integer>{2, 12}));
}

TEST(Snf, CompleteGraphK3) {
  auto snf = smith_normal_form(kK3);
  EXPECT_EQ(snf.rank, 2u);
  EXPECT_EQ(snf.gamma, (std::vector<Integer>{1, 3}));
  EXPECT_EQ(oracle::minor_gcd(kK3, 1), 1);
  EXPECT_EQ(oracle::minor_gcd(kK3, 2), 3);
}

TEST(Snf, ZeroMatrix) {
  auto snf = smith_normal_form(IntMatrix(2, 3));
  EXPECT_EQ(snf.rank, 0u);
  EXPECT_TRUE(snf.gamma.empty());
}

TEST(MinorGcd, Examples) {
  EXPECT_EQ(minor_gcd(kK3, 2), 3);
  EXPECT_EQ(minor_gcd(kTwoForOne, 3), 1);
  EXPECT_EQ(minor_gcd(IntMatrix(3, 3), 2), 0);
  EXPECT_THROW(minor_gcd(kK3, 0), precondition_error);
  EXPECT_THROW(minor_gcd(kK3, 4), precondition_error);
}

TEST(Adjoint, Examples) {
  EXPECT_EQ(adjoint(IntMatrix::identity(4)), IntMatrix::identity(4));
  EXPECT_EQ(adjoint(IntMatrix{{2, 0}, {0, 3}}), (IntMatrix{{3, 0}, {0, 2}}));
  IntMatrix a = adjoint(kK3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(a(i, j), 3);
  EXPECT_EQ(a, oracle::cofactor_adjoint(kK3));
  EXPECT_THROW(adjoint(IntMatrix(2, 3)), precondition_error);
}

TEST(Kernel, Examples) {
  auto k = integer_kernel(IntMatrix{{1, 1, 1}});
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_EQ(v[0] + v[1] + v[2], 0);
  auto k2 = integer_kernel(kTwoForOne);
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2[0], make_vector({1, 1, 1, 1}));
  EXPECT_TRUE(integer_kernel(IntMatrix{{2, 1}, {1, 1}}).empty());
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(IntMatrix::identity(4)), 4u);
  IntMatrix A{{4, 4, 0, 0, 0, -1, 1, 6},
              {0, 0, 1, 0, 0, 1, 0, 0},
              {0, 0, 0, 4, 0, 7, 9, -6},
              {0, 0, 0, 0, 2, -3, -3, 2}};
  EXPECT_EQ(rank(A), 4u);
  EXPECT_EQ(rank(IntMatrix(3, 5)), 0u);
  EXPECT_EQ(rank(kK3), 2u);
}

TEST(Determinant, MatchesLaplace) {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + t % 6;
    IntMatrix m = oracle::random_matrix(rng, n, n, -9, 9);
    EXPECT_EQ(determinant(m), oracle::laplace_det(m));
  }
}

TEST(Hnf, CanonicalUnderUnimodularRowChange) {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 5;
    IntMatrix m = oracle::random_matrix(rng, r, c, -6, 6);
    IntMatrix u = oracle::random_unimodular(rng, r);
    EXPECT_EQ(hermite_normal_form(m), hermite_normal_form(u * m));
    EXPECT_EQ(hermite_normal_form(m).rows(), rank(m));
  }
}

// Property suite: PLQ = Gamma, unimodularity, divisibility, minor-gcd identity.
TEST(SnfProperty, RandomMatrices) {
  std::mt19937 rng(20240601);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    IntMatrix L = oracle::random_matrix(rng, r, c, -9, 9);
    if (t % 7 == 0 && r > 1)  // force rank deficiency now and then
      for (std::size_t j = 0; j < c; ++j) L(r - 1, j) = L(0, j) * 2;
    auto snf = smith_normal_form(L);
    EXPECT_EQ(snf.P * L * snf.Q, diag_of(snf, r, c));
    EXPECT_EQ(abs(determinant(snf.P)), 1);
    EXPECT_EQ(abs(determinant(snf.Q)), 1);
    EXPECT_EQ(snf.rank, rank(L));
    Integer prod = 1;
    for (std::size_t i = 0; i < snf.rank; ++i) {
      EXPECT_GT(snf.gamma[i], 0);
      if (i + 1 < snf.rank) {
        EXPECT_TRUE(divides(snf.gamma[i], snf.gamma[i + 1]));
      }
      prod *= snf.gamma[i];
      EXPECT_EQ(prod, oracle::minor_gcd(L, i + 1));
      EXPECT_EQ(prod, minor_gcd(L, i + 1));
    }
    for (std::size_t i = snf.rank + 1; i <= std::min(r, c); ++i) EXPECT_EQ(oracle::minor_gcd(L, i), 0);
    ++checked;
  }
  EXPECT_GE(checked, 100);
}

TEST(AdjointProperty, RandomSquare) {
  std::mt19937 rng(77);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + t % 6;
    IntMatrix L = oracle::random_matrix(rng, n, n, -9, 9);
    IntMatrix adj = adjoint(L);
    IntMatrix detI = IntMatrix::identity(n);
    Integer d = determinant(L);
    for (std::size_t i = 0; i < n; ++i) detI(i, i) = d;
    EXPECT_EQ(L * adj, detI);
    EXPECT_EQ(adj * L, detI);
  }
}

TEST(KernelProperty, SaturatedAndAnnihilated) {
  std::mt19937 rng(99);
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
    IntMatrix L = oracle::random_matrix(rng, r, c, -9, 9);
    auto ker = integer_kernel(L);
    EXPECT_EQ(ker.size(), c - rank(L));
    for (const auto& v : ker) EXPECT_TRUE(is_zero(L * v));
    if (!ker.empty()) {
      auto snf = smith_normal_form(IntMatrix::from_rows(ker, c));
      for (const auto& g : snf.gamma) EXPECT_EQ(g, 1);
    }
  }
}

TEST(Unimodular, Inverse) {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    IntMatrix u = oracle::random_unimodular(rng, 1 + t % 5);
    EXPECT_EQ(u * unimodular_inverse(u), IntMatrix::identity(u.rows()));
  }
}
