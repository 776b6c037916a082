#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "binlat/exactmat.hpp"
#include "binlat/ideal.hpp"
#include "binlat/lattice.hpp"
#include "binlat/matclass.hpp"
#include "binlat/polynomial.hpp"

namespace binlat {

// t_i^a - t^u with u_i = 0, u != 0.
struct CriticalBinomial {
  std::size_t var = 0;
  Integer exponent;
  IntVector minus;

  IntVector vector() const {
    IntVector v(minus.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = -minus[j];
    v[var] += exponent;
    return v;
  }
  std::string to_string(const std::vector<std::string>& names = {}) const { return oriented_string(vector(), names); }
};

inline constexpr unsigned long kDefaultCriticalCap = 1000000;

namespace detail {

// All u >= 0 with u_i = 0 and d.u = target, in GRevLex-ascending order of t^u.
inline std::vector<IntVector> graded_minus_parts(const IntVector& d, std::size_t i, const Integer& target) {
  const std::size_t n = d.size();
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (j != i) free.push_back(j);
  std::vector<IntVector> out;
  IntVector u(n);
  auto rec = [&](auto&& self, std::size_t k, Integer rest) -> void {
    const std::size_t j = free[k];
    if (k + 1 == free.size()) {
      if (divides(d[j], rest)) {
        u[j] = rest / d[j];
        out.push_back(u);
      }
      return;
    }
    for (Integer x = 0; x * d[j] <= rest; ++x) {
      u[j] = x;
      self(self, k + 1, Integer(rest - x * d[j]));
    }
    u[j] = 0;
  };
  rec(rec, 0, target);
  std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
    return MonomialOrder::grevlex().compare(positive_part(a), positive_part(b)) < 0;
  });
  return out;
}

struct GradedRank2 {
  IntVector d;
};

inline GradedRank2 require_graded_rank2(const Lattice& lat, const char* what) {
  require(lat.ambient_dim() == 3, std::string(what) + ": lattice is not in Z^3");
  require(lat.rank() == 2, std::string(what) + ": lattice rank is not 2");
  auto d = grading_vector(lat);
  require(d.has_value(), std::string(what) + ": no grading (lattice is not homogeneous)");
  return {*d};
}

// Minimal exponent a and every u realizing it, GRevLex-ascending.
inline std::pair<Integer, std::vector<IntVector>> critical_candidates(const Lattice& lat, const IntVector& d,
                                                                       std::size_t i, unsigned long cap) {
  for (unsigned long a = 1; a <= cap; ++a) {
    std::vector<IntVector> hits;
    for (auto& u : graded_minus_parts(d, i, Integer(a) * d[i])) {
      IntVector v(u.size());
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = -u[j];
      v[i] += a;
      if (lat.contains(v)) hits.push_back(std::move(u));
    }
    if (!hits.empty()) return {Integer(a), std::move(hits)};
  }
  throw precondition_error("critical_binomial: iteration cap exceeded");
}

}  // namespace detail

inline CriticalBinomial critical_binomial(const Lattice& lat, std::size_t i, unsigned long cap = kDefaultCriticalCap) {
  auto g = detail::require_graded_rank2(lat, "critical_binomial");
  require(i < 3, "critical_binomial: variable index out of range");
  auto [a, us] = detail::critical_candidates(lat, g.d, i, cap);
  return CriticalBinomial{i, a, us.front()};
}

enum class CriticalCase { doubly_pure, full_pcb };

struct CriticalBinomialSet {
  std::array<CriticalBinomial, 3> f;  // f[r] is t_{perm[r]}-critical, r the role in the normal form
  CriticalCase which = CriticalCase::full_pcb;
  std::array<std::size_t, 3> perm{0, 1, 2};  // role r -> original variable
  IntMatrix matrix;                          // CB matrix, original numbering, column lattice = lat
  IntVector d;
};

namespace detail {

inline IntMatrix unpermute(const IntMatrix& roles, const std::array<std::size_t, 3>& perm) {
  IntMatrix M(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) M(perm[r], perm[c]) = roles(r, c);
  return M;
}

inline bool is_cb_for(const IntMatrix& M, const Lattice& lat) {
  return classify(M).cb && Lattice::from_columns(M) == lat;
}

}  // namespace detail

inline CriticalBinomialSet cb_structure(const Lattice& lat, unsigned long cap = kDefaultCriticalCap) {
  auto g = detail::require_graded_rank2(lat, "cb_structure");
  std::array<Integer, 3> a;
  std::array<std::vector<IntVector>, 3> ties;
  for (std::size_t i = 0; i < 3; ++i) std::tie(a[i], ties[i]) = detail::critical_candidates(lat, g.d, i, cap);

  CriticalBinomialSet out;
  out.d = g.d;
  // case (b): every minus part has full support off the diagonal
  for (const auto& u0 : ties[0])
    for (const auto& u1 : ties[1])
      for (const auto& u2 : ties[2]) {
        const std::array<const IntVector*, 3> u{&u0, &u1, &u2};
        bool full = true;
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j) full = full && (i == j || (*u[i])[j] > 0);
        if (!full) continue;
        IntMatrix M(3, 3);
        for (std::size_t c = 0; c < 3; ++c)
          for (std::size_t r = 0; r < 3; ++r) M(r, c) = r == c ? a[c] : Integer(-(*u[c])[r]);
        if (!detail::is_cb_for(M, lat)) continue;
        for (std::size_t i = 0; i < 3; ++i) out.f[i] = CriticalBinomial{i, a[i], *u[i]};
        out.which = CriticalCase::full_pcb;
        out.matrix = M;
        return out;
      }

  // case (a): f1 = t1^a1 - t3^c3, f2 = t2^b2 - t1^b1 t3^b3 with 0 <= b1 <= a1, in role numbering
  std::array<std::size_t, 3> perm{0, 1, 2};
  do {
    const std::size_t v1 = perm[0], v2 = perm[1], v3 = perm[2];
    for (const auto& u1 : ties[v1]) {
      if (u1[v2] != 0) continue;
      const Integer a1 = a[v1], c3 = u1[v3];
      for (const auto& u2 : ties[v2]) {
        Integer b1 = u2[v1], b3 = u2[v3];
        while (b1 > a1) {
          b1 -= a1;
          b3 += c3;
        }
        const Integer b2 = a[v2];
        IntMatrix R = IntMatrix::from_rows({{a1, Integer(-b1), Integer(b1 - a1)},
                                            {Integer(0), b2, Integer(-b2)},
                                            {Integer(-c3), Integer(-b3), Integer(b3 + c3)}},
                                           3);
        IntMatrix M = detail::unpermute(R, perm);
        if (!detail::is_cb_for(M, lat)) continue;
        IntVector u2r(3);
        u2r[v1] = b1;
        u2r[v3] = b3;
        out.f[0] = CriticalBinomial{v1, a1, u1};
        out.f[1] = CriticalBinomial{v2, b2, u2r};
        IntVector u3(3);
        u3[v1] = a1;
        out.f[2] = CriticalBinomial{v3, c3, u3};
        out.which = CriticalCase::doubly_pure;
        out.perm = perm;
        out.matrix = M;
        return out;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  ensure(false, "cb_structure: no CB matrix found for a homogeneous rank-2 lattice");
  return out;
}

struct FindHullResult {
  IntMatrix cb_matrix;
  BinomialIdeal hull;
};

inline FindHullResult find_hull_gcb3(const IntMatrix& L, unsigned long cap = kDefaultCriticalCap) {
  require(L.rows() == 3 && L.cols() == 3, "find_hull_gcb3: matrix is not 3x3");
  require(classify(L).gcb, "find_hull_gcb3: matrix is not GCB");
  Lattice lat = Lattice::from_columns(L);
  FindHullResult r;
  r.cb_matrix = cb_structure(lat, cap).matrix;
  r.hull = matrix_ideal(r.cb_matrix);
  ensure(Lattice::from_columns(r.cb_matrix) == lat, "find_hull_gcb3: column lattices differ");
  ensure(r.hull == saturate_variables(matrix_ideal(L)), "find_hull_gcb3: I(M) differs from the saturation");
  return r;
}

struct CbPropertiesReport {
  bool first_syzygy = false;   // t2^{a23} f1 + t3^{a31} f2 + t1^{a12} f3 = 0
  bool second_syzygy = false;  // t3^{a32} f1 + t1^{a13} f2 + t2^{a21} f3 = 0
  bool lattice_ideal = false;  // I = I(L) = Hull(I), hence unmixed
  std::size_t minimal_generators = 0;
  bool complete_intersection() const { return minimal_generators == 2; }
  bool almost_complete_intersection() const { return minimal_generators == 3; }
};

inline CbPropertiesReport cb_properties_check(const IntMatrix& L) {
  require(L.rows() == 3 && L.cols() == 3, "cb_properties_check: matrix is not 3x3");
  require(classify(L).cb, "cb_properties_check: matrix is not CB");
  auto a = [&](std::size_t i, std::size_t j) { return to_exponent(Integer(-L(i - 1, j - 1))); };
  auto t = [&](std::size_t i, Exponent e) { return Polynomial::term(Monomial::variable(3, i - 1, e)); };
  std::array<Polynomial, 3> f;
  for (std::size_t i = 0; i < 3; ++i)
    f[i] = Polynomial::term(positive_part(L.col(i))) - Polynomial::term(negative_part(L.col(i)));
  CbPropertiesReport r;
  r.first_syzygy = (t(2, a(2, 3)) * f[0] + t(3, a(3, 1)) * f[1] + t(1, a(1, 2)) * f[2]).is_zero();
  r.second_syzygy = (t(3, a(3, 2)) * f[0] + t(1, a(1, 3)) * f[1] + t(2, a(2, 1)) * f[2]).is_zero();
  BinomialIdeal I = matrix_ideal(L);
  r.lattice_ideal = is_lattice_ideal(I);
  r.minimal_generators = minimal_generator_count(I, *grading_vector(L));
  return r;
}

}  // namespace binlat
