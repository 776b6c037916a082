#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "binlat/exactmat.hpp"
#include "binlat/ideal.hpp"
#include "binlat/lattice.hpp"
#include "binlat/volume.hpp"

namespace binlat {

namespace detail {

inline Integer exact_quotient(const Integer& a, const Integer& b, const char* what) {
  ensure(b != 0 && divides(b, a), std::string(what) + ": quotient is not integral");
  return a / b;
}

inline std::vector<IntVector> with_origin(std::vector<IntVector> pts, std::size_t n) {
  pts.push_back(IntVector(n));
  return pts;
}

}  // namespace detail

struct ToricDegree {
  Integer degree;
  Integer normalized_volume;  // r! vol(conv(0, v_1..v_s))
  Integer torsion_order;      // |T(Z^n / <v_1..v_s>)|
};

// Degree of the toric ideal of K[x^{v_1},...,x^{v_s}], the v_i the columns of V.
inline ToricDegree toric_degree_data(const IntMatrix& V) {
  ToricDegree t;
  t.normalized_volume = normalized_volume(LatticePolytope(detail::with_origin(V.columns(), V.rows())));
  t.torsion_order = torsion_order(Lattice::from_columns(V));
  t.degree = detail::exact_quotient(t.normalized_volume, t.torsion_order, "degree_toric");
  return t;
}

inline Integer degree_toric(const IntMatrix& V) { return toric_degree_data(V).degree; }

enum class DefiningConstruction { hyperplane, hermite };

struct LatticeDegree {
  Integer degree;
  std::size_t rank = 0;
  Integer torsion_order;      // |T(Z^s / L)|
  Integer normalized_volume;  // (s-r)! vol(conv(0, columns of A)); 1 when r = s
  Integer defining_torsion;   // |T(Z^{s-r} / <columns of A>)|; 1 when r = s
  IntMatrix defining_matrix;  // empty when r = s
};

// Degree of S/I(L) from a given defining matrix A with L in ker(A), rank s - r.
inline LatticeDegree degree_lattice_with(const Lattice& lat, const IntMatrix& A) {
  const std::size_t s = lat.ambient_dim();
  LatticeDegree out;
  out.rank = lat.rank();
  out.torsion_order = torsion_order(lat);
  require(out.rank < s, "degree_lattice: full-rank lattice has no defining matrix");
  require(A.cols() == s && rank(A) == s - out.rank, "degree_lattice: defining matrix has the wrong shape or rank");
  for (const auto& g : lat.generators()) require(is_zero(A * g), "degree_lattice: lattice is not in ker(A)");
  out.defining_matrix = A;
  ToricDegree t = toric_degree_data(A);
  out.normalized_volume = t.normalized_volume;
  out.defining_torsion = t.torsion_order;
  out.degree = detail::exact_quotient(out.torsion_order * t.normalized_volume, t.torsion_order, "degree_lattice");
  return out;
}

inline LatticeDegree degree_lattice_data(const Lattice& lat,
                                         DefiningConstruction how = DefiningConstruction::hyperplane) {
  const std::size_t s = lat.ambient_dim();
  if (lat.rank() == s) {
    LatticeDegree out;
    out.rank = s;
    out.torsion_order = torsion_order(lat);
    out.normalized_volume = 1;
    out.defining_torsion = 1;
    out.degree = out.torsion_order;
    return out;
  }
  IntMatrix A = how == DefiningConstruction::hyperplane ? hyperplane_defining_matrix(lat) : defining_matrix(lat);
  return degree_lattice_with(lat, A);
}

inline Integer degree_lattice(const Lattice& lat) { return degree_lattice_data(lat).degree; }

// max(d) |T(Z^s/L)| / gcd(d) for a dimension-one lattice homogeneous under d.
inline Integer degree_graded_dim1(const Lattice& lat, const IntVector& d) {
  const std::size_t s = lat.ambient_dim();
  require(d.size() == s, "degree_graded_dim1: grading length mismatch");
  for (const auto& x : d) require(x > 0, "degree_graded_dim1: grading is not positive");
  for (const auto& g : lat.generators()) require(dot(d, g) == 0, "degree_graded_dim1: generator not orthogonal to d");
  require(lat.rank() + 1 == s, "degree_graded_dim1: lattice rank is not s-1");
  Integer mx = *std::max_element(d.begin(), d.end());
  return detail::exact_quotient(mx * torsion_order(lat), gcd(d), "degree_graded_dim1");
}

// v_i = (-1)^i det(B without row i), i = 1..s, for the s x (s-1) basis matrix B.
inline IntVector signed_maximal_minors(const std::vector<IntVector>& basis) {
  require(!basis.empty(), "signed_maximal_minors: empty basis");
  const std::size_t s = basis[0].size();
  require(basis.size() + 1 == s, "signed_maximal_minors: need s-1 vectors in Z^s");
  IntMatrix B = IntMatrix::from_columns(basis, s);
  IntVector v(s);
  for (std::size_t i = 0; i < s; ++i) {
    IntMatrix sub(s - 1, s - 1);
    for (std::size_t r = 0, rr = 0; r < s; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0; c + 1 < s; ++c) sub(rr, c) = B(r, c);
      ++rr;
    }
    Integer d = determinant(sub);
    v[i] = i % 2 == 0 ? Integer(-d) : d;  // (-1)^{i+1} with 0-based i
  }
  return v;
}

struct Dim1Degree {
  IntVector minors;
  Integer degree;
};

inline Dim1Degree degree_dim1_from_basis_data(const std::vector<IntVector>& basis) {
  Dim1Degree out;
  out.minors = signed_maximal_minors(basis);
  require(!is_zero(out.minors), "degree_dim1_from_basis: basis is rank deficient");
  Integer mx = 0, mn = 0;
  for (const auto& x : out.minors) {
    if (x > mx) mx = x;
    if (x < mn) mn = x;
  }
  out.degree = mx - mn;
  return out;
}

inline Integer degree_dim1_from_basis(const std::vector<IntVector>& basis) {
  return degree_dim1_from_basis_data(basis).degree;
}

struct MatrixIdealDegree {
  Integer degree;
  IntVector grading;
  Integer minor_gcd;  // Delta_{s-1}(L)
};

// max(d) Delta_{s-1}(L) for a matrix ideal graded by d > 0 (d primitive, dL = 0) with V(I, t_i) = {0}.
inline MatrixIdealDegree degree_matrix_ideal_graded(const IntMatrix& L, const IntVector& d) {
  const std::size_t s = L.rows();
  require(s >= 2, "degree_matrix_ideal: need at least two variables");
  require(d.size() == s, "degree_matrix_ideal: grading length mismatch");
  for (const auto& x : d) require(x > 0, "degree_matrix_ideal: grading is not positive");
  for (std::size_t j = 0; j < L.cols(); ++j)
    require(dot(d, L.col(j)) == 0, "degree_matrix_ideal: dL = 0 fails for the given grading");
  require(vanishing_condition(matrix_ideal(L)), "degree_matrix_ideal: V(I, t_i) = {0} fails");
  MatrixIdealDegree out;
  out.grading = primitive(d);
  out.minor_gcd = minor_gcd(L, s - 1);
  out.degree = *std::max_element(out.grading.begin(), out.grading.end()) * out.minor_gcd;
  return out;
}

inline MatrixIdealDegree degree_matrix_ideal_data(const IntMatrix& L) {
  require(L.rows() >= 2, "degree_matrix_ideal: need at least two variables");
  auto d = grading_vector(L);
  require(d.has_value(), "degree_matrix_ideal: no positive grading d with dL = 0");
  return degree_matrix_ideal_graded(L, *d);
}

inline Integer degree_matrix_ideal(const IntMatrix& L) { return degree_matrix_ideal_data(L).degree; }

}  // namespace binlat
