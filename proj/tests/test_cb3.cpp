#include <gtest/gtest.h>

#include <random>

#include "binlat/cb3.hpp"
#include "oracles.hpp"

using namespace binlat;

namespace {

Lattice tocomplete() { return Lattice(3, {make_vector({-2, 4, -2}), make_vector({-2, -3, 4})}); }

const IntMatrix kHullIsPcb{{4, -5, -3}, {-1, 3, -1}, {-1, -1, 3}};
const IntMatrix kHullIsNotPcb{{4, -1, -1}, {-2, 3, -1}, {-1, -1, 1}};
const IntMatrix kMPcb{{4, -1, -3}, {-1, 2, -1}, {-1, -2, 3}};
const IntMatrix kMNotPcb{{1, 0, -1}, {-1, 2, -1}, {0, -1, 1}};
const IntMatrix kMComplete{{4, -2, -2}, {-1, 4, -3}, {-2, -2, 4}};

// Random rank-2 sublattice of d^perp for a random positive d.
Lattice random_graded_lattice(std::mt19937& rng) {
  std::uniform_int_distribution<int> dd(1, 6), cd(-2, 2);
  for (;;) {
    IntMatrix D{{dd(rng), dd(rng), dd(rng)}};
    auto ker = integer_kernel(D);
    IntMatrix C{{cd(rng), cd(rng)}, {cd(rng), cd(rng)}};
    if (determinant(C) == 0) continue;
    std::vector<IntVector> gens;
    for (std::size_t c = 0; c < 2; ++c) {
      IntVector v(3);
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t j = 0; j < 3; ++j) v[j] += C(k, c) * ker[k][j];
      gens.push_back(v);
    }
    return Lattice(3, gens);
  }
}

}  // namespace

TEST(CriticalBinomial, Examples) {
  EXPECT_EQ(critical_binomial(tocomplete(), 0).to_string(), "t1^4 - t2*t3^2");
  EXPECT_EQ(critical_binomial(tocomplete(), 2).to_string(), "t3^4 - t1^2*t2^3");
  auto f = critical_binomial(Lattice(3, {make_vector({1, -1, 0}), make_vector({0, 1, -1})}), 0);
  EXPECT_EQ(f.exponent, 1);
  EXPECT_EQ(f.to_string(), "t1 - t3");  // t3 < t2 in GRevLex
  EXPECT_THROW(critical_binomial(Lattice(3, {make_vector({2, -1, -1}), make_vector({-3, 1, -1})}), 0),
               precondition_error);
  EXPECT_THROW(critical_binomial(Lattice(3, {make_vector({1, -1, 0})}), 0), precondition_error);
  EXPECT_THROW(critical_binomial(tocomplete(), 0, 3), precondition_error);
}

TEST(CbStructure, Examples) {
  auto cs = cb_structure(tocomplete());
  EXPECT_EQ(cs.which, CriticalCase::full_pcb);
  EXPECT_EQ(cs.matrix, kMComplete);
  EXPECT_EQ(cs.d, make_vector({5, 6, 7}));

  cs = cb_structure(Lattice::from_columns(kHullIsNotPcb));
  EXPECT_EQ(cs.which, CriticalCase::doubly_pure);
  EXPECT_EQ(Lattice::from_columns(cs.matrix), Lattice::from_columns(kMNotPcb));
  EXPECT_TRUE(classify(cs.matrix).cb);
  // ties among t3-critical binomials go to the GRevLex-smallest minus term t2^2
  EXPECT_EQ(cs.f[1].to_string(), "t3 - t2^2");
  EXPECT_EQ(cs.perm, (std::array<std::size_t, 3>{0, 2, 1}));

  EXPECT_THROW(cb_structure(Lattice(3, {make_vector({2, -1, -1}), make_vector({-3, 1, -1})})), precondition_error);
}

TEST(FindHull, Examples) {
  auto r = find_hull_gcb3(kHullIsPcb);
  EXPECT_EQ(r.cb_matrix, kMPcb);
  EXPECT_EQ(r.hull, BinomialIdeal::from_vectors(3, {make_vector({4, -1, -1}), make_vector({-1, 2, -2}),
                                                     make_vector({-3, -1, 3})}));
  r = find_hull_gcb3(kHullIsNotPcb);
  EXPECT_EQ(Lattice::from_columns(r.cb_matrix), Lattice::from_columns(kMNotPcb));
  EXPECT_EQ(matrix_ideal(r.cb_matrix), matrix_ideal(kMNotPcb));
  EXPECT_EQ(r.hull, BinomialIdeal::from_vectors(3, {make_vector({1, -1, 0}), make_vector({0, 2, -1}),
                                                     make_vector({-1, -1, 1})}));
  r = find_hull_gcb3(kMComplete);
  EXPECT_EQ(Lattice::from_columns(r.cb_matrix), Lattice::from_columns(kMComplete));
  EXPECT_EQ(r.hull, matrix_ideal(kMComplete));
  EXPECT_THROW(find_hull_gcb3(IntMatrix{{1, -1}, {-1, 1}}), precondition_error);
  EXPECT_THROW(find_hull_gcb3(IntMatrix{{1, 2, 0}, {0, 1, 0}, {0, 0, 1}}), precondition_error);
}

TEST(CbProperties, Examples) {
  auto r = cb_properties_check(kMNotPcb);
  EXPECT_TRUE(r.first_syzygy && r.second_syzygy && r.lattice_ideal);
  EXPECT_EQ(r.minimal_generators, 2u);
  EXPECT_TRUE(r.complete_intersection());

  r = cb_properties_check(kMComplete);
  EXPECT_TRUE(r.almost_complete_intersection());

  r = cb_properties_check(IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  EXPECT_TRUE(r.first_syzygy && r.second_syzygy && r.lattice_ideal);
  EXPECT_THROW(cb_properties_check(kHullIsPcb), precondition_error);
}

TEST(Cb3Property, RoundTrip) {
  std::mt19937 rng(71);
  for (int t = 0; t < 150; ++t) {
    IntMatrix L = oracle::random_cb(rng, 3, 3);
    Lattice lat = Lattice::from_columns(L);
    auto cs = cb_structure(lat);
    EXPECT_EQ(Lattice::from_columns(cs.matrix), lat);
    EXPECT_EQ(matrix_ideal(cs.matrix), saturate_variables(matrix_ideal(L))) << L.to_string();
    if (cs.which == CriticalCase::full_pcb) {
      const auto& M = cs.matrix;
      for (std::size_t i = 0; i < 3; ++i) {
        Integer off = 0;
        for (std::size_t j = 0; j < 3; ++j)
          if (j != i) off -= M(i, j);
        EXPECT_EQ(M(i, i), off);  // a1 = b1 + c1, b2 = a2 + c2, c3 = a3 + b3
      }
    }
    auto p = cb_properties_check(L);
    EXPECT_TRUE(p.first_syzygy && p.second_syzygy && p.lattice_ideal);
  }
}

TEST(Cb3Property, GeneratorBound) {
  std::mt19937 rng(72);
  int doubly = 0, full = 0;
  for (int t = 0; t < 150; ++t) {
    Lattice lat = random_graded_lattice(rng);
    auto cs = cb_structure(lat);
    (cs.which == CriticalCase::full_pcb ? full : doubly)++;
    BinomialIdeal I = lattice_ideal(lat);
    EXPECT_LE(minimal_generator_count(I, cs.d), 3u);
    EXPECT_EQ(matrix_ideal(cs.matrix), I);
  }
  EXPECT_GT(doubly, 0);
  EXPECT_GT(full, 0);
}

TEST(Cb3Property, GcbHull) {
  std::mt19937 rng(73);
  for (int t = 0; t < 100; ++t) {
    IntMatrix L = oracle::random_gpcb(rng, 3, 4, 2);
    auto r = find_hull_gcb3(L);
    EXPECT_TRUE(classify(r.cb_matrix).cb);
  }
}
