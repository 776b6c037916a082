#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "binlat/exactmat.hpp"

namespace binlat {

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<Integer> invariant_factors)
      : factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      ensure(factors_[i] >= 2, "FiniteAbelianGroup: invariant factor < 2");
      if (i) ensure(divides(factors_[i - 1], factors_[i]), "FiniteAbelianGroup: divisibility chain");
    }
  }
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  Integer order() const {
    Integer o = 1;
    for (const auto& f : factors_) o *= f;
    return o;
  }
  bool is_trivial() const { return factors_.empty(); }
  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

  // Build from a list of SNF diagonal entries, dropping the 1s.
  static FiniteAbelianGroup from_gamma(const std::vector<Integer>& gamma) {
    std::vector<Integer> f;
    for (const auto& g : gamma)
      if (g != 1) f.push_back(g);
    return FiniteAbelianGroup(std::move(f));
  }

 private:
  std::vector<Integer> factors_;
};

// Subgroup of Z^s given by (possibly redundant) generators. Immutable; the
// Hermite basis is computed once at construction.
class Lattice {
 public:
  Lattice() = default;
  Lattice(std::size_t ambient_dim, std::vector<IntVector> generators)
      : dim_(ambient_dim), gens_(std::move(generators)) {
    for (const auto& g : gens_)
      require(g.size() == dim_, "Lattice: generator length differs from ambient dimension");
    hnf_ = hermite_normal_form(IntMatrix::from_rows(gens_, dim_));
    for (std::size_t i = 0; i < hnf_.rows(); ++i) {
      std::size_t c = 0;
      while (hnf_(i, c) == 0) ++c;
      pivot_cols_.push_back(c);
    }
  }

  // Generators are the columns of m.
  static Lattice from_columns(const IntMatrix& m) { return Lattice(m.rows(), m.columns()); }
  static Lattice full(std::size_t s) { return from_columns(IntMatrix::identity(s)); }

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<IntVector>& generators() const { return gens_; }
  std::size_t rank() const { return hnf_.rows(); }
  // s x m matrix with the generators as columns.
  IntMatrix generator_matrix() const { return IntMatrix::from_columns(gens_, dim_); }
  // Canonical basis, one row per basis vector.
  const IntMatrix& hermite_basis() const { return hnf_; }
  std::vector<IntVector> basis() const { return hnf_.row_list(); }

  // Coordinates of x in the Hermite basis, if x lies in the lattice.
  std::optional<IntVector> coordinates(IntVector x) const {
    require(x.size() == dim_, "Lattice::coordinates: length mismatch");
    IntVector coords(hnf_.rows());
    std::size_t next = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (next < pivot_cols_.size() && pivot_cols_[next] == c) {
        const Integer& p = hnf_(next, c);
        if (!divides(p, x[c])) return std::nullopt;
        Integer q = x[c] / p;
        coords[next] = q;
        for (std::size_t j = c; j < dim_; ++j) x[j] -= q * hnf_(next, j);
        ++next;
      } else if (x[c] != 0) {
        return std::nullopt;
      }
    }
    return coords;
  }
  bool contains(const IntVector& x) const { return coordinates(x).has_value(); }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim_ == b.dim_ && a.hnf_ == b.hnf_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> gens_;
  IntMatrix hnf_;
  std::vector<std::size_t> pivot_cols_;
};

inline SnfDecomposition lattice_snf(const Lattice& lat) {
  return smith_normal_form(lat.generator_matrix());
}

inline FiniteAbelianGroup critical_group(const Lattice& lat) {
  if (lat.generators().empty()) return {};
  return FiniteAbelianGroup::from_gamma(lattice_snf(lat).gamma);
}

inline Integer torsion_order(const Lattice& lat) { return critical_group(lat).order(); }

// Column lattice of the transposed generator matrix, in Z^m.
inline Lattice transpose_lattice(const Lattice& lat) {
  return Lattice(lat.generators().size(), lat.generator_matrix().row_list());
}

// Rows: a basis (HNF) of the saturated integer kernel of the transposed generator matrix.
inline IntMatrix defining_matrix(const Lattice& lat) {
  const std::size_t s = lat.ambient_dim();
  require(lat.rank() < s, "defining_matrix: lattice has full rank");
  if (lat.generators().empty()) return IntMatrix::identity(s);
  std::vector<IntVector> rows = integer_kernel(lat.generator_matrix().transpose());
  return IntMatrix::from_rows(rows, s);
}

// Defining matrix built from hyperplane normals: extend a basis of L by unit
// vectors e_j (greedily, by index) and take for each added e_j the primitive
// normal to L + span of the other added unit vectors, first nonzero entry positive.
inline IntMatrix hyperplane_defining_matrix(const Lattice& lat) {
  const std::size_t s = lat.ambient_dim();
  require(lat.rank() < s, "hyperplane_defining_matrix: lattice has full rank");
  std::vector<IntVector> basis = lat.basis();
  std::vector<std::size_t> added;
  {
    std::vector<IntVector> cur = basis;
    for (std::size_t j = 0; j < s && cur.size() < s; ++j) {
      IntVector e(s);
      e[j] = 1;
      cur.push_back(e);
      if (rank(IntMatrix::from_rows(cur, s)) == cur.size())
        added.push_back(j);
      else
        cur.pop_back();
    }
  }
  ensure(added.size() == s - lat.rank(), "hyperplane_defining_matrix: basis extension failed");
  IntMatrix A(added.size(), s);
  for (std::size_t i = 0; i < added.size(); ++i) {
    std::vector<IntVector> span = basis;
    for (std::size_t k = 0; k < added.size(); ++k) {
      if (k == i) continue;
      IntVector e(s);
      e[added[k]] = 1;
      span.push_back(e);
    }
    std::vector<IntVector> normal =
        span.empty() ? std::vector<IntVector>{} : integer_kernel(IntMatrix::from_rows(span, s));
    if (span.empty()) {
      IntVector e(s);
      e[added[i]] = 1;
      normal.push_back(e);
    }
    ensure(normal.size() == 1, "hyperplane_defining_matrix: normal not unique");
    IntVector w = primitive(normal[0]);
    auto first = std::find_if(w.begin(), w.end(), [](const Integer& x) { return x != 0; });
    if (*first < 0)
      for (auto& x : w) x = -x;
    for (std::size_t j = 0; j < s; ++j) A(i, j) = w[j];
  }
  return A;
}

// {a : eta a in L for some eta != 0}.
inline Lattice saturation(const Lattice& lat) {
  const std::size_t s = lat.ambient_dim();
  if (lat.rank() == s) return Lattice::full(s);
  if (lat.rank() == 0) return Lattice(s, {});
  return Lattice(s, integer_kernel(defining_matrix(lat)));
}

namespace detail {

// Nonzero kernel vectors of minimal support, sign-normalized so that the
// first nonzero entry is positive. Exponential in m.cols().
inline std::vector<IntVector> kernel_circuits(const IntMatrix& m) {
  const std::size_t n = m.cols();
  require(n <= 20, "kernel circuit enumeration: dimension too large");
  std::vector<IntVector> out;
  std::vector<unsigned long> supports;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    bool has_smaller = false;
    for (unsigned long s : supports)
      if ((s & mask) == s) {
        has_smaller = true;
        break;
      }
    if (has_smaller) continue;
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (1UL << j)) idx.push_back(j);
    IntMatrix sub(m.rows(), idx.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t k = 0; k < idx.size(); ++k) sub(i, k) = m(i, idx[k]);
    if (rank(sub) != idx.size() - 1) continue;
    std::vector<IntVector> ker = integer_kernel(sub);
    if (ker.size() != 1) continue;
    if (std::any_of(ker[0].begin(), ker[0].end(), [](const Integer& x) { return x == 0; }))
      continue;
    IntVector v(n);
    for (std::size_t k = 0; k < idx.size(); ++k) v[idx[k]] = ker[0][k];
    if (ker[0][0] < 0)
      for (auto& x : v) x = -x;
    out.push_back(v);
    supports.push_back(mask);
  }
  return out;
}

}  // namespace detail

// Some x with m x = 0 and all x_i > 0, primitive; nullopt if none exists.
inline std::optional<IntVector> positive_kernel_vector(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (n == 0) return std::nullopt;
  std::vector<IntVector> ker = integer_kernel(m);
  if (ker.empty()) return std::nullopt;
  if (ker.size() == 1) {
    IntVector v = ker[0];
    if (v[0] < 0)
      for (auto& x : v) x = -x;
    if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x > 0; })) return v;
    return std::nullopt;
  }
  // A positive kernel vector is a conformal sum of nonnegative circuits.
  IntVector sum(n);
  for (const auto& c : detail::kernel_circuits(m)) {
    if (std::any_of(c.begin(), c.end(), [](const Integer& x) { return x < 0; })) continue;
    for (std::size_t j = 0; j < n; ++j) sum[j] += c[j];
  }
  if (std::all_of(sum.begin(), sum.end(), [](const Integer& x) { return x > 0; }))
    return primitive(sum);
  return std::nullopt;
}

// Positive d with d L = 0 and gcd(d) = 1.
inline std::optional<IntVector> grading_vector(const IntMatrix& L) {
  return positive_kernel_vector(L.transpose());
}

inline std::optional<IntVector> grading_vector(const Lattice& lat) {
  if (lat.generators().empty()) return IntVector(lat.ambient_dim(), Integer(1));
  return grading_vector(lat.generator_matrix());
}

// a^h = (a, 0) - |a| e_{s+1} when |a| >= 0 and (-a)^h otherwise.
inline IntVector homogenize_vector(const IntVector& a) {
  Integer sum = 0;
  for (const auto& x : a) sum += x;
  IntVector h;
  h.reserve(a.size() + 1);
  if (sum >= 0) {
    h = a;
    h.push_back(-sum);
  } else {
    for (const auto& x : a) h.push_back(-x);
    h.push_back(sum);
  }
  return h;
}

inline Lattice homogenize_lattice(const Lattice& lat) {
  std::vector<IntVector> gens;
  for (const auto& g : lat.generators()) gens.push_back(homogenize_vector(g));
  return Lattice(lat.ambient_dim() + 1, std::move(gens));
}

inline bool is_prime(const Integer& p) {
  if (p < 2) return false;
  for (Integer d = 2; d * d <= p; ++d)
    if (divides(d, p)) return false;
  return true;
}

// {a : p^r a in L for some r >= 0}.
inline Lattice p_saturation(const Lattice& lat, const Integer& p) {
  require(is_prime(p), "p_saturation: p is not prime");
  const std::size_t s = lat.ambient_dim();
  if (lat.generators().empty()) return lat;
  SnfDecomposition snf = lattice_snf(lat);
  IntMatrix Pinv = unimodular_inverse(snf.P);
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    Integer g = snf.gamma[i];
    while (divides(p, g)) g /= p;
    IntVector v = Pinv.col(i);
    for (auto& x : v) x *= g;
    gens.push_back(v);
  }
  return Lattice(s, std::move(gens));
}

}  // namespace binlat
