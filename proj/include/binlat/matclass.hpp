#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "binlat/exactmat.hpp"
#include "binlat/graphs.hpp"
#include "binlat/ideal.hpp"
#include "binlat/lattice.hpp"
#include "binlat/polynomial.hpp"

namespace binlat {

struct MatrixClassReport {
  bool pb = false, ppb = false, cb = false, pcb = false, gcb = false, gpcb = false;
  std::optional<IntVector> b;  // L b^T = 0, b > 0
  std::optional<IntVector> c;  // c L = 0, c > 0
};

inline void require_square(const IntMatrix& L, const char* what) {
  require(L.rows() == L.cols() && L.rows() > 0, std::string(what) + ": matrix is not square");
}

// Checks the sign pattern: a_{i,i} on the diagonal, -a_{i,j} off it, all a >= 0.
inline MatrixClassReport classify(const IntMatrix& L) {
  require_square(L, "classify");
  const std::size_t s = L.rows();
  MatrixClassReport r;
  r.b = positive_kernel_vector(L);
  r.c = positive_kernel_vector(L.transpose());
  bool shape = true, all_nonzero = true, pb = true;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j ? L(i, j) < 0 : L(i, j) > 0) shape = false;
      if (L(i, j) == 0) all_nonzero = false;
    }
  for (std::size_t j = 0; j < s && pb; ++j) {
    if (L(j, j) <= 0) pb = false;
    bool off = false;
    for (std::size_t i = 0; i < s; ++i) off = off || (i != j && L(i, j) != 0);
    pb = pb && off;
  }
  if (!shape || !pb) return r;
  bool row_sums_zero = is_zero(L * IntVector(s, Integer(1)));
  r.pb = true;
  r.ppb = all_nonzero;
  r.cb = row_sums_zero;
  r.pcb = all_nonzero && row_sums_zero;
  r.gcb = r.b.has_value();
  r.gpcb = all_nonzero && r.gcb;
  if (r.cb && !r.b) r.b = IntVector(s, Integer(1));
  return r;
}

// Arc i -> j whenever a_{i,j} != 0, loops included.
inline WeightedDigraph underlying_digraph(const IntMatrix& L) {
  require_square(L, "underlying_digraph");
  WeightedDigraph G(L.rows(), true);
  for (std::size_t i = 0; i < L.rows(); ++i)
    for (std::size_t j = 0; j < L.cols(); ++j)
      if (L(i, j) != 0) G.add_arc(i, j, abs(L(i, j)));
  return G;
}

struct TheoremCheck {
  std::string name;
  bool applies = false;
  bool holds = true;
};

struct TransposeReport {
  MatrixClassReport matrix, transpose;
  std::size_t rank = 0;
  bool strongly_connected = false;
  std::vector<TheoremCheck> checks;
  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return !c.applies || c.holds; });
  }
};

inline TransposeReport check_transpose_theorems(const IntMatrix& L) {
  require_square(L, "check_transpose_theorems");
  const std::size_t s = L.rows();
  TransposeReport r;
  r.matrix = classify(L);
  r.transpose = classify(L.transpose());
  r.rank = rank(L);
  r.strongly_connected = strongly_connected(underlying_digraph(L));
  const bool corank1 = r.rank + 1 == s;
  r.checks.push_back({"gpcb-transpose", r.matrix.gpcb, corank1 && r.transpose.gpcb});
  r.checks.push_back({"gcb-strongly-connected-transpose", r.matrix.gcb && r.strongly_connected,
                      corank1 && r.transpose.gcb});
  r.checks.push_back({"gcb3-transpose", r.matrix.gcb && s == 3, corank1 && r.transpose.gcb});
  return r;
}

struct GcbVanishingReport {
  bool strongly_connected = false;  // G_L
  bool vanishing = false;           // V(I(L^T), t_i) = {0}
  bool adjoint_positive = false;    // adj(L) > 0 entrywise
  bool equivalent() const { return strongly_connected == vanishing && vanishing == adjoint_positive; }
};

inline GcbVanishingReport gcb_vanishing_equivalence(const IntMatrix& L) {
  require_square(L, "gcb_vanishing_equivalence");
  require(classify(L).gcb, "gcb_vanishing_equivalence: matrix is not GCB");
  GcbVanishingReport r;
  r.strongly_connected = strongly_connected(underlying_digraph(L));
  r.vanishing = vanishing_condition(matrix_ideal(L.transpose()));
  IntMatrix adj = adjoint(L);
  r.adjoint_positive = true;
  for (std::size_t i = 0; i < adj.rows(); ++i)
    for (std::size_t j = 0; j < adj.cols(); ++j) r.adjoint_positive = r.adjoint_positive && adj(i, j) > 0;
  return r;
}

// Witness b of a GPCB matrix, primitive (the kernel is one-dimensional).
inline IntVector gpcb_witness(const IntMatrix& L, const char* what) {
  require_square(L, what);
  MatrixClassReport r = classify(L);
  require(r.gpcb, std::string(what) + ": matrix is not GPCB");
  return primitive(*r.b);
}

struct GpcbSyzygyData {
  IntVector b;
  IntMatrix associated;              // L diag(b)
  std::vector<IntVector> shifts;     // b(1), ..., b(s)
  std::vector<Monomial> x, y;        // f_i = x_i - y_i
  std::vector<Polynomial> f, g, q;
};

namespace detail {

// b(i) from the entries of the associated matrix: diagonal b_jj, off-diagonal -b_jk.
inline std::vector<IntVector> syzygy_shifts(const IntMatrix& B) {
  const std::size_t s = B.rows();
  auto off = [&](std::size_t j, std::size_t k) -> Integer { return -B(j, k); };
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < s; ++i) {
    IntVector v(s);
    if (i + 1 < s) {
      for (std::size_t j = 0; j < s; ++j) {
        if (j == i || j == i + 1) continue;
        Integer x = B(j, j);
        if (j < i) {
          for (std::size_t k = j + 1; k <= i; ++k) x -= off(j, k);
        } else {
          for (std::size_t k = j + 1; k < s; ++k) x -= off(j, k);
          for (std::size_t k = 0; k <= i; ++k) x -= off(j, k);
        }
        v[j] = x;
      }
    } else {
      for (std::size_t j = 1; j + 1 < s; ++j) {
        Integer x = B(j, j);
        for (std::size_t k = j + 1; k < s; ++k) x -= off(j, k);
        v[j] = x;
      }
    }
    for (const auto& x : v) ensure(x >= 0, "gpcb_syzygy: shift vector has a negative coordinate");
    out.push_back(std::move(v));
  }
  return out;
}

inline Monomial exponent_monomial(const IntVector& v) {
  std::vector<Exponent> e;
  for (const auto& x : v) e.push_back(to_exponent(x));
  return Monomial(std::move(e));
}

}  // namespace detail

inline GpcbSyzygyData gpcb_syzygy(const IntMatrix& L) {
  GpcbSyzygyData d;
  d.b = gpcb_witness(L, "gpcb_syzygy");
  const std::size_t s = L.rows();
  d.associated = L;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) d.associated(i, j) *= d.b[j];
  d.shifts = detail::syzygy_shifts(d.associated);
  Polynomial sum(s);
  for (std::size_t i = 0; i < s; ++i) {
    IntVector col = L.col(i);
    d.x.push_back(positive_part(col));
    d.y.push_back(negative_part(col));
    Polynomial X = Polynomial::term(d.x[i]), Y = Polynomial::term(d.y[i]);
    d.f.push_back(X - Y);
    const unsigned bi = static_cast<unsigned>(d.b[i].get_ui());
    Polynomial g(s), q(s);
    for (unsigned j = 1; j <= bi; ++j) g += X.pow(bi - j) * Y.pow(j - 1);
    for (unsigned j = 1; j + 1 <= bi; ++j) q += (X.pow(bi - 1 - j) * Y.pow(j - 1)).scaled(Rational(j), Monomial(s));
    ensure(q * d.f[i] == g - Y.pow(bi - 1).scaled(Rational(d.b[i]), Monomial(s)),
           "gpcb_syzygy: identity q_i f_i = g_i - b_i y_i^(b_i-1) fails");
    sum += (g * d.f[i]).scaled(1, detail::exponent_monomial(d.shifts[i]));
    d.g.push_back(std::move(g));
    d.q.push_back(std::move(q));
  }
  ensure(sum.is_zero(), "gpcb_syzygy: the syzygy does not vanish");
  return d;
}

// t^{b(s)} g_s
inline Polynomial gpcb_hull_divisor(const GpcbSyzygyData& d) {
  const std::size_t s = d.b.size();
  return d.g[s - 1].scaled(1, detail::exponent_monomial(d.shifts[s - 1]));
}

struct GpcbHull {
  BinomialIdeal hull;        // I(L-column lattice)
  Polynomial divisor;        // t^{b(s)} g_s
  bool colon_matches = false;
};

inline GpcbHull gpcb_hull_data(const IntMatrix& L) {
  GpcbSyzygyData d = gpcb_syzygy(L);
  GpcbHull h;
  BinomialIdeal I = matrix_ideal(L);
  h.hull = saturate_variables(I);
  h.divisor = gpcb_hull_divisor(d);
  h.colon_matches = colon(PolyIdeal::from(I), h.divisor) == PolyIdeal::from(h.hull);
  ensure(h.colon_matches, "gpcb_hull: (I : t^b(s) g_s) differs from the lattice ideal");
  return h;
}

inline BinomialIdeal gpcb_hull(const IntMatrix& L) { return gpcb_hull_data(L).hull; }

struct EmbeddedComponent {
  PolyIdeal component;  // I + (t^{b(s)} g_s)
  Polynomial generator;
  BinomialIdeal hull;
};

inline EmbeddedComponent gpcb_embedded_component(const IntMatrix& L) {
  require_square(L, "gpcb_embedded_component");
  require(L.rows() >= 4, "gpcb_embedded_component: need s >= 4");
  GpcbHull h = gpcb_hull_data(L);
  BinomialIdeal I = matrix_ideal(L);
  PolyIdeal PI = PolyIdeal::from(I);
  require(saturate(PI, h.divisor) == PolyIdeal::from(h.hull),
          "gpcb_embedded_component: (I : g) is not (I : g^inf)");
  EmbeddedComponent e;
  e.generator = h.divisor;
  e.hull = h.hull;
  std::vector<Polynomial> gens = PI.generators();
  gens.push_back(h.divisor);
  e.component = PolyIdeal(L.rows(), std::move(gens));
  ensure(intersect(PolyIdeal::from(h.hull), e.component) == PI, "gpcb_embedded_component: I != hull cap component");
  ensure(!e.component.is_unit(), "gpcb_embedded_component: component is the unit ideal");
  return e;
}

struct TwoByTwoReport {
  IntVector b;
  Integer c1, c2;
  Polynomial h, g1, g2;
  bool principal = false, pcb = false, lattice = false;  // pcb: I(L) is a PCB ideal
  BinomialIdeal hull;  // (t1^c1 - t2^c2)
};

inline TwoByTwoReport analyze_2x2(const IntMatrix& L) {
  require(L.rows() == 2 && L.cols() == 2, "analyze_2x2: matrix is not 2x2");
  TwoByTwoReport r;
  r.b = gpcb_witness(L, "analyze_2x2");
  const Integer &b1 = r.b[0], &b2 = r.b[1];
  r.c1 = L(0, 0) / b2;
  r.c2 = -L(1, 0) / b2;
  ensure(L(0, 0) == b2 * r.c1 && -L(0, 1) == b1 * r.c1 && -L(1, 0) == b2 * r.c2 && L(1, 1) == b1 * r.c2,
         "analyze_2x2: entries do not factor through b");
  Monomial u = Monomial::variable(2, 0, to_exponent(r.c1)), v = Monomial::variable(2, 1, to_exponent(r.c2));
  Polynomial U = Polynomial::term(u), V = Polynomial::term(v);
  r.h = U - V;
  auto geometric = [&](const Integer& bi) {
    const unsigned k = static_cast<unsigned>(bi.get_ui());
    Polynomial g(2);
    for (unsigned j = 0; j < k; ++j) g += U.pow(k - 1 - j) * V.pow(j);
    return g;
  };
  r.g1 = geometric(b1);
  r.g2 = geometric(b2);
  BinomialIdeal I = matrix_ideal(L);
  Polynomial f1 = Polynomial::term(positive_part(L.col(0))) - Polynomial::term(negative_part(L.col(0)));
  Polynomial f2 = Polynomial::term(positive_part(L.col(1))) - Polynomial::term(negative_part(L.col(1)));
  ensure(f1 == r.h * r.g2 && f2 == Polynomial(2) - r.h * r.g1, "analyze_2x2: factorization fails");
  r.hull = BinomialIdeal::from_vectors(2, {IntVector{r.c1, -r.c2}});
  ensure(saturate_variables(I) == r.hull, "analyze_2x2: hull is not (t1^c1 - t2^c2)");
  r.principal = I.reduced_basis().size() == 1;
  r.lattice = is_lattice_ideal(I);
  const bool branch = b1 == 1 || b2 == 1;
  // in the principal branch I is also the ideal of the PCB matrix [[c1, -c1], [-c2, c2]]
  r.pcb = branch && matrix_ideal(IntMatrix::from_rows({{r.c1, -r.c1}, {-r.c2, r.c2}}, 2)) == I;
  ensure(r.principal == branch && r.lattice == branch && r.pcb == branch, "analyze_2x2: trichotomy fails");
  return r;
}

// PB with every column binomial of support >= 4; true when I(L) is not a lattice ideal.
inline bool pb_not_lattice_check(const IntMatrix& L) {
  require_square(L, "pb_not_lattice_check");
  require(classify(L).pb, "pb_not_lattice_check: matrix is not PB");
  for (std::size_t j = 0; j < L.cols(); ++j) {
    std::size_t supp = 0;
    for (std::size_t i = 0; i < L.rows(); ++i) supp += L(i, j) != 0;
    require(supp >= 4, "pb_not_lattice_check: a column binomial has support below 4");
  }
  return !is_lattice_ideal(matrix_ideal(L));
}

}  // namespace binlat
