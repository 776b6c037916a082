#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "binlat/degree.hpp"
#include "binlat/exactmat.hpp"
#include "binlat/lattice.hpp"

namespace binlat {

// a_lambda: kernel of t_i -> zeta_1^{p_{1,i}} ... zeta_{s-1}^{p_{s-1,i}} x^{d_i},
// zeta_k a primitive gamma_k-th root of unity raised to lambda_k.
struct CharacterComponent {
  std::vector<Integer> lambda;  // lambda_k mod gamma_k
  std::vector<Integer> gamma;   // gamma_1 | ... | gamma_{s-1}
  IntMatrix p_rows;             // first s-1 rows of P
  IntVector d;

  bool is_trivial() const {
    return std::all_of(lambda.begin(), lambda.end(), [](const Integer& x) { return x == 0; });
  }
  friend bool operator==(const CharacterComponent& a, const CharacterComponent& b) { return a.lambda == b.lambda; }
};

struct SymbolicDecomposition {
  std::vector<Integer> gamma;
  IntMatrix p_rows;
  IntVector d;
  std::vector<CharacterComponent> components;
};

namespace detail {

inline constexpr unsigned long kMaxComponents = 1000000;

inline SymbolicDecomposition decomposition_frame(const Lattice& lat) {
  const std::size_t s = lat.ambient_dim();
  require(s >= 2 && lat.rank() + 1 == s, "symbolic_decomposition: lattice rank is not s-1");
  require(grading_vector(lat).has_value(), "symbolic_decomposition: lattice is not homogeneous");
  SnfDecomposition snf = lattice_snf(lat);
  SymbolicDecomposition out;
  out.gamma = snf.gamma;
  ensure(out.gamma.size() + 1 == s, "symbolic_decomposition: unexpected SNF rank");
  out.p_rows = IntMatrix(s - 1, s);
  for (std::size_t i = 0; i + 1 < s; ++i)
    for (std::size_t j = 0; j < s; ++j) out.p_rows(i, j) = snf.P(i, j);
  out.d = snf.P.row(s - 1);
  if (out.d[0] < 0)
    for (auto& x : out.d) x = -x;
  for (const auto& x : out.d) ensure(x > 0, "symbolic_decomposition: last row of P is not a positive grading");
  for (const auto& g : lat.generators()) ensure(dot(out.d, g) == 0, "symbolic_decomposition: d does not annihilate L");
  Integer total = 1;
  for (const auto& g : out.gamma) total *= g;
  require(total <= kMaxComponents, "symbolic_decomposition: too many components to enumerate");
  return out;
}

}  // namespace detail

inline SymbolicDecomposition symbolic_decomposition(const Lattice& lat) {
  SymbolicDecomposition out = detail::decomposition_frame(lat);
  const std::size_t r = out.gamma.size();
  std::vector<Integer> lambda(r, Integer(0));
  for (;;) {
    out.components.push_back(CharacterComponent{lambda, out.gamma, out.p_rows, out.d});
    std::size_t k = 0;
    while (k < r && (lambda[k] += 1) == out.gamma[k]) lambda[k++] = 0;
    if (k == r) break;
  }
  ensure(Integer(static_cast<unsigned long>(out.components.size())) == torsion_order(lat),
         "symbolic_decomposition: component count differs from the torsion order");
  return out;
}

struct GaloisOrbit {
  std::vector<Integer> representative;
  std::size_t size = 0;
  Integer degree;
};

struct GaloisOrbitReport {
  std::vector<Integer> gamma;
  FiniteAbelianGroup group;
  IntVector d;
  Integer component_degree;  // max(d) / gcd(d), per component over an algebraically closed field
  Integer total_degree;
  std::vector<GaloisOrbit> orbits;
};

// Orbits of Lambda under lambda -> k lambda, k a unit mod lcm(gamma).
inline GaloisOrbitReport rational_orbit_report(const Lattice& lat) {
  SymbolicDecomposition dec = symbolic_decomposition(lat);
  GaloisOrbitReport rep;
  rep.gamma = dec.gamma;
  rep.group = FiniteAbelianGroup::from_gamma(dec.gamma);
  rep.d = dec.d;
  rep.component_degree = *std::max_element(dec.d.begin(), dec.d.end()) / gcd(dec.d);
  Integer N = 1;
  for (const auto& g : dec.gamma) N = lcm(N, g);
  std::vector<Integer> units;
  for (Integer k = 1; k <= N; ++k)
    if (gcd(k, N) == 1) units.push_back(k);
  std::set<std::vector<Integer>> seen;
  for (const auto& c : dec.components) {
    if (seen.count(c.lambda)) continue;
    std::set<std::vector<Integer>> orbit;
    for (const auto& k : units) {
      std::vector<Integer> img(c.lambda.size());
      for (std::size_t i = 0; i < img.size(); ++i) img[i] = (k * c.lambda[i]) % dec.gamma[i];
      orbit.insert(std::move(img));
    }
    seen.insert(orbit.begin(), orbit.end());
    GaloisOrbit o;
    o.representative = c.lambda;
    o.size = orbit.size();
    o.degree = rep.component_degree * static_cast<unsigned long>(o.size);
    rep.orbits.push_back(std::move(o));
  }
  rep.total_degree = 0;
  for (const auto& o : rep.orbits) rep.total_degree += o.degree;
  ensure(rep.total_degree == degree_graded_dim1(lat, dec.d), "rational_orbit_report: orbit degrees do not add up");
  return rep;
}

// Upper bound on the number of primary components in characteristic p.
inline Integer component_bound_char_p(const Lattice& lat, const Integer& p) {
  return torsion_order(p_saturation(lat, p));
}

}  // namespace binlat
