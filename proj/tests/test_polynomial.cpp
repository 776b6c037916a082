#include <gtest/gtest.h>

#include <random>

#include "binlat/polynomial.hpp"
#include "oracles.hpp"

using namespace binlat;

namespace {

Polynomial var(std::size_t n, std::size_t i, Exponent e = 1) { return Polynomial::term(Monomial::variable(n, i, e)); }
Polynomial one(std::size_t n) { return Polynomial::constant(n, 1); }

}  // namespace

TEST(Polynomial, Arithmetic) {
  Polynomial x = var(2, 0), y = var(2, 1);
  Polynomial p = (x - y) * (x + y);
  EXPECT_EQ(p, var(2, 0, 2) - var(2, 1, 2));
  EXPECT_EQ(p.to_string(), "t1^2 - t2^2");
  EXPECT_EQ(*exact_divide(p, x - y), x + y);
  EXPECT_FALSE(exact_divide(p, x + one(2) + y).has_value());
  EXPECT_EQ((x - one(2)).pow(3).to_string(), "t1^3 - 3*t1^2 + 3*t1 - 1");
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Polynomial, GroebnerAgreesWithBinomialEngine) {
  std::mt19937 rng(55);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 2 + rng() % 3;
    std::vector<IntVector> gens;
    for (int k = 0; k < 2; ++k) {
      IntVector v = oracle::random_matrix(rng, 1, n, -3, 3).row(0);
      if (!is_zero(v)) gens.push_back(v);
    }
    if (gens.empty()) continue;
    BinomialIdeal I = BinomialIdeal::from_vectors(n, gens);
    PolyIdeal P = PolyIdeal::from(I);
    std::vector<Polynomial> expect;
    for (const auto& g : I.reduced_basis()) expect.push_back(Polynomial::from(g));
    EXPECT_EQ(P.reduced_basis(), expect);
  }
}

TEST(Polynomial, IntersectionAndColon) {
  const std::size_t n = 2;
  Polynomial x = var(n, 0), y = var(n, 1);
  PolyIdeal I(n, {x}), J(n, {y});
  EXPECT_EQ(intersect(I, J), PolyIdeal(n, {x * y}));
  PolyIdeal K(n, {x * x - y * y});
  EXPECT_EQ(colon(K, x - y), PolyIdeal(n, {x + y}));
  EXPECT_EQ(saturate(PolyIdeal(n, {x * y, x * x}), x), PolyIdeal(n, {one(n)}));
  EXPECT_TRUE(saturate(PolyIdeal(n, {x * y, x * x}), x).is_unit());
  EXPECT_EQ(saturate(PolyIdeal(n, {x * y - x}), x), PolyIdeal(n, {y - one(n)}));
}

TEST(Polynomial, BinomialColonMatches) {
  // colon by a monomial agrees with the binomial engine
  IntMatrix L{{4, -1, -1}, {-2, 3, -1}, {-1, -1, 1}};
  BinomialIdeal I = matrix_ideal(L);
  Monomial g({1, 1, 1});
  BinomialIdeal C = colon_monomial(I, g);
  EXPECT_EQ(colon(PolyIdeal::from(I), Polynomial::term(g)), PolyIdeal::from(C));
}
