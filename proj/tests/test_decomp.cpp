#include <gtest/gtest.h>

#include <random>
#include <set>

#include "binlat/decomp.hpp"
#include "oracles.hpp"

using namespace binlat;

namespace {

Lattice fig1_toppling() {
  return Lattice::from_columns(IntMatrix{{3, -1, -2, 0}, {-1, 8, -3, -4}, {-2, -3, 6, -1}, {0, -4, -1, 5}});
}

Lattice tocomplete() { return Lattice(3, {make_vector({-2, 4, -2}), make_vector({-2, -3, 4})}); }

Lattice monomial_curve() { return saturation(Lattice(3, integer_kernel(IntMatrix{{3, 4, 5}}))); }

}  // namespace

TEST(SymbolicDecomposition, Examples) {
  auto dec = symbolic_decomposition(monomial_curve());
  ASSERT_EQ(dec.components.size(), 1u);
  EXPECT_TRUE(dec.components[0].is_trivial());
  EXPECT_EQ(dec.d, make_vector({3, 4, 5}));

  dec = symbolic_decomposition(tocomplete());
  EXPECT_EQ(dec.components.size(), 2u);
  EXPECT_EQ(dec.d, make_vector({5, 6, 7}));
  EXPECT_TRUE(dec.components[0].is_trivial());

  dec = symbolic_decomposition(fig1_toppling());
  EXPECT_EQ(dec.components.size(), 67u);
  EXPECT_EQ(dec.d, IntVector(4, Integer(1)));
}

TEST(SymbolicDecomposition, Errors) {
  EXPECT_THROW(symbolic_decomposition(Lattice(3, {make_vector({1, -1, 0})})), precondition_error);
  EXPECT_THROW(symbolic_decomposition(Lattice(3, {make_vector({2, -1, -1}), make_vector({-3, 1, -1})})),
               precondition_error);
}

TEST(OrbitReport, Examples) {
  auto rep = rational_orbit_report(fig1_toppling());
  ASSERT_EQ(rep.orbits.size(), 2u);
  std::multiset<std::size_t> sizes{rep.orbits[0].size, rep.orbits[1].size};
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 66}));
  EXPECT_EQ(rep.orbits[0].degree, 1);
  EXPECT_EQ(rep.orbits[1].degree, 66);
  EXPECT_EQ(rep.total_degree, 67);

  rep = rational_orbit_report(tocomplete());
  ASSERT_EQ(rep.orbits.size(), 2u);
  EXPECT_EQ(rep.orbits[0].size, 1u);
  EXPECT_EQ(rep.orbits[0].degree, 7);
  EXPECT_EQ(rep.orbits[1].degree, 7);
  EXPECT_EQ(rep.total_degree, 14);

  rep = rational_orbit_report(monomial_curve());
  ASSERT_EQ(rep.orbits.size(), 1u);
  EXPECT_EQ(rep.orbits[0].degree, 5);
}

TEST(OrbitReport, CharacteristicBound) {
  EXPECT_EQ(component_bound_char_p(fig1_toppling(), 67), 1);
  EXPECT_EQ(component_bound_char_p(fig1_toppling(), 2), 67);
  EXPECT_EQ(component_bound_char_p(tocomplete(), 2), 1);
}

TEST(DecompProperty, CountsAndDegrees) {
  std::mt19937 rng(61);
  for (int t = 0; t < 100; ++t) {
    IntMatrix L = oracle::random_gpcb(rng, 2 + rng() % 3, 3, 2);
    Lattice lat = Lattice::from_columns(L);
    auto dec = symbolic_decomposition(lat);
    const Integer gamma = torsion_order(lat);
    EXPECT_EQ(Integer(static_cast<unsigned long>(dec.components.size())), gamma);
    std::set<std::vector<Integer>> distinct;
    for (const auto& c : dec.components) distinct.insert(c.lambda);
    EXPECT_EQ(distinct.size(), dec.components.size());
    EXPECT_EQ(FiniteAbelianGroup::from_gamma(dec.gamma), critical_group(lat));

    auto rep = rational_orbit_report(lat);
    std::size_t covered = 0;
    for (const auto& o : rep.orbits) covered += o.size;
    EXPECT_EQ(covered, dec.components.size());
    EXPECT_LE(rep.orbits.size(), dec.components.size());
    EXPECT_EQ(rep.total_degree, degree_graded_dim1(lat, dec.d));
    EXPECT_EQ(rep.total_degree, affine_degree(saturate_variables(matrix_ideal(L))).degree);
  }
}
