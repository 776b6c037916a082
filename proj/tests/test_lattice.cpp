#include <gtest/gtest.h>

#include <random>

#include "binlat/lattice.hpp"
#include "oracles.hpp"

using namespace binlat;

namespace {

Lattice nov25() {
  return Lattice(8, {make_vector({2, 1, 1, 1, -1, -1, -1, -2}), make_vector({1, 1, -1, -1, 1, 1, -1, -1}),
                     make_vector({2, -1, 1, -2, 1, -1, 1, -1}), make_vector({5, -5, 0, 0, 0, 0, 0, 0})});
}

const IntMatrix kFig1{{3, -1, -2, 0}, {-1, 8, -3, -4}, {-2, -3, 6, -1}, {0, -4, -1, 5}};
const IntMatrix kTwoForOne{{4, -2, -1, -1}, {-1, 4, -2, -1}, {-1, -1, 3, -1}, {-1, -1, -1, 3}};
const IntMatrix kFig3{{5, -4, 0, -1}, {0, 1, -1, 0}, {0, -1, 1, 0}, {-3, 0, -1, 4}};

// Torsion order as the gcd of maximal minors, by enumeration.
Integer order_by_oracle(const IntMatrix& gens) {
  Integer g = oracle::minor_gcd(gens, rank(gens));
  return g;
}

}  // namespace

TEST(CriticalGroup, Examples) {
  EXPECT_TRUE(critical_group(Lattice::full(2)).is_trivial());
  EXPECT_EQ(torsion_order(Lattice::full(2)), 1);
  EXPECT_EQ(torsion_order(nov25()), 5);
  EXPECT_EQ(critical_group(nov25()).invariant_factors(), std::vector<Integer>{5});
  EXPECT_EQ(torsion_order(Lattice::from_columns(kFig1)), 67);
  EXPECT_EQ(critical_group(Lattice::from_columns(kFig1)).invariant_factors(), std::vector<Integer>{67});
}

TEST(Saturation, Examples) {
  Lattice sat = saturation(Lattice::full(3));
  EXPECT_EQ(sat, Lattice::full(3));
  EXPECT_EQ(saturation(Lattice(2, {make_vector({2, -2})})), Lattice(2, {make_vector({1, -1})}));
  Lattice tc(3, {make_vector({-2, 4, -2}), make_vector({-2, -3, 4})});
  EXPECT_EQ(order_by_oracle(tc.generator_matrix()), 2);
  EXPECT_EQ(torsion_order(tc), 2);
  Lattice s = saturation(tc);
  EXPECT_EQ(torsion_order(s), 1);
  EXPECT_EQ(s.rank(), 2u);
  for (const auto& g : tc.generators()) EXPECT_TRUE(s.contains(g));
  EXPECT_EQ(saturation(s), s);
}

TEST(DefiningMatrix, Examples) {
  IntMatrix A = defining_matrix(Lattice(3, {make_vector({1, -1, 0}), make_vector({0, 1, -1})}));
  EXPECT_EQ(A, (IntMatrix{{1, 1, 1}}));
  IntMatrix B = defining_matrix(Lattice(3, {make_vector({2, -1, -1}), make_vector({-3, 1, -1})}));
  ASSERT_EQ(B.rows(), 1u);
  EXPECT_TRUE(B.row(0) == make_vector({2, 5, -1}) || B.row(0) == make_vector({-2, -5, 1}));
  IntMatrix C = defining_matrix(Lattice(3, {make_vector({-2, 4, -2}), make_vector({-2, -3, 4})}));
  EXPECT_EQ(C.row(0), make_vector({5, 6, 7}));
  EXPECT_THROW(defining_matrix(Lattice::full(2)), precondition_error);
}

TEST(DefiningMatrix, HyperplaneConstructionMatchesDisplayedMatrix) {
  IntMatrix A = hyperplane_defining_matrix(nov25());
  EXPECT_EQ(A, (IntMatrix{{4, 4, 0, 0, 0, -1, 1, 6},
                          {0, 0, 1, 0, 0, 1, 0, 0},
                          {0, 0, 0, 4, 0, 7, 9, -6},
                          {0, 0, 0, 0, 2, -3, -3, 2}}));
  Lattice l = nov25();
  for (const auto& g : l.generators()) EXPECT_TRUE(is_zero(A * g));
  EXPECT_EQ(torsion_order(Lattice::from_columns(A)), 8);
  EXPECT_EQ(torsion_order(Lattice::from_columns(defining_matrix(nov25()))), 1);
}

TEST(GradingVector, Examples) {
  // d L = 0 means L^T d = 0: the positive kernel vector of L^T grades I(L).
  auto d = grading_vector(kTwoForOne);
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, make_vector({20, 24, 31, 25}));
  EXPECT_EQ(*positive_kernel_vector(kTwoForOne.transpose()), make_vector({20, 24, 31, 25}));
  EXPECT_EQ(*grading_vector(kTwoForOne.transpose()), make_vector({1, 1, 1, 1}));
  EXPECT_EQ(*grading_vector(kFig1), make_vector({1, 1, 1, 1}));
  EXPECT_FALSE(grading_vector(kFig3));
  EXPECT_EQ(*grading_vector(kFig3.transpose()), make_vector({1, 1, 1, 1}));
  // rank < s-1: positive vector exists in a 2-dimensional left kernel
  auto d2 = grading_vector(IntMatrix{{1}, {-1}, {0}});
  ASSERT_TRUE(d2);
  EXPECT_EQ((*d2)[0], (*d2)[1]);
  EXPECT_GT((*d2)[2], 0);
  EXPECT_FALSE(grading_vector(IntMatrix{{1}, {1}, {0}}));
}

TEST(Homogenize, Vectors) {
  EXPECT_EQ(homogenize_vector(make_vector({1, 1})), make_vector({1, 1, -2}));
  EXPECT_EQ(homogenize_vector(make_vector({2, -3})), make_vector({-2, 3, -1}));
  EXPECT_EQ(homogenize_vector(make_vector({0, 0})), make_vector({0, 0, 0}));
}

TEST(Homogenize, Lattices) {
  Lattice h = homogenize_lattice(Lattice(2, {make_vector({2, -2})}));
  EXPECT_EQ(h, Lattice(3, {make_vector({2, -2, 0})}));
  Lattice j(3, {make_vector({2, -1, -1}), make_vector({-3, 1, -1})});
  Lattice jh = homogenize_lattice(j);
  EXPECT_EQ(order_by_oracle(jh.generator_matrix()), order_by_oracle(j.generator_matrix()));
  EXPECT_EQ(torsion_order(jh), torsion_order(j));
}

TEST(PSaturation, Examples) {
  Lattice l(2, {make_vector({2, 0}), make_vector({0, 12})});
  Lattice p2 = p_saturation(l, 2);
  EXPECT_EQ(critical_group(p2).invariant_factors(), std::vector<Integer>{3});
  // brute force: a in p2 iff 2^r a in l for r <= 4
  for (int x = -6; x <= 6; ++x)
    for (int y = -6; y <= 6; ++y) {
      IntVector a = make_vector({x, y});
      bool in = false;
      for (int r = 0; r <= 4 && !in; ++r) {
        IntVector b = {a[0] * (1 << r), a[1] * (1 << r)};
        in = l.contains(b);
      }
      EXPECT_EQ(p2.contains(a), in) << x << "," << y;
    }
  EXPECT_EQ(p_saturation(Lattice(2, {make_vector({2, -2})}), 2), Lattice(2, {make_vector({1, -1})}));
  EXPECT_EQ(p_saturation(l, 5), l);
  EXPECT_THROW(p_saturation(l, 4), precondition_error);
}

TEST(LatticeProperty, TransposeTorsionEquality) {
  std::mt19937 rng(4242);
  for (int t = 0; t < 120; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix L = oracle::random_matrix(rng, r, c, -5, 5);
    Lattice lat = Lattice::from_columns(L);
    EXPECT_EQ(torsion_order(lat), torsion_order(transpose_lattice(lat)));
    EXPECT_EQ(torsion_order(lat), torsion_order(Lattice::from_columns(L.transpose())));
  }
}

TEST(LatticeProperty, SaturationIdempotentAndTorsionFree) {
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    std::size_t s = 2 + rng() % 4, m = 1 + rng() % 4;
    Lattice lat = Lattice::from_columns(oracle::random_matrix(rng, s, m, -6, 6));
    Lattice sat = saturation(lat);
    EXPECT_EQ(sat.rank(), lat.rank());
    EXPECT_TRUE(critical_group(sat).is_trivial());
    EXPECT_EQ(saturation(sat), sat);
    for (const auto& g : lat.generators()) EXPECT_TRUE(sat.contains(g));
  }
}

TEST(LatticeProperty, HomogenizationPreservesTorsion) {
  std::mt19937 rng(23);
  for (int t = 0; t < 100; ++t) {
    std::size_t s = 2 + rng() % 4;
    std::size_t m = 1 + rng() % (s - 1);
    Lattice lat = Lattice::from_columns(oracle::random_matrix(rng, s, m, -5, 5));
    EXPECT_EQ(torsion_order(homogenize_lattice(lat)), torsion_order(lat));
  }
}

TEST(LatticeProperty, PSaturation) {
  std::mt19937 rng(31);
  const int primes[] = {2, 3, 5};
  for (int t = 0; t < 100; ++t) {
    std::size_t s = 1 + rng() % 4, m = 1 + rng() % 4;
    Lattice lat = Lattice::from_columns(oracle::random_matrix(rng, s, m, -8, 8));
    Integer p = primes[t % 3];
    Lattice ps = p_saturation(lat, p);
    EXPECT_FALSE(divides(p, torsion_order(ps)));
    for (const auto& g : lat.generators()) EXPECT_TRUE(ps.contains(g));
    // index of lat in ps is a power of p
    Integer idx = torsion_order(lat) / torsion_order(ps);
    EXPECT_EQ(idx * torsion_order(ps), torsion_order(lat));
    while (divides(p, idx) && idx > 1) idx /= p;
    EXPECT_EQ(idx, 1);
  }
}

TEST(LatticeProperty, DefiningMatrixAnnihilates) {
  std::mt19937 rng(8);
  for (int t = 0; t < 100; ++t) {
    std::size_t s = 2 + rng() % 5;
    std::size_t m = 1 + rng() % (s - 1);
    Lattice lat = Lattice::from_columns(oracle::random_matrix(rng, s, m, -5, 5));
    if (lat.rank() == s) continue;
    IntMatrix A = defining_matrix(lat);
    IntMatrix H = hyperplane_defining_matrix(lat);
    EXPECT_EQ(A.rows(), s - lat.rank());
    EXPECT_EQ(rank(H), s - lat.rank());
    for (const auto& g : lat.generators()) {
      EXPECT_TRUE(is_zero(A * g));
      EXPECT_TRUE(is_zero(H * g));
    }
  }
}
