#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "binlat/error.hpp"

namespace binlat {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer gcd(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

// Truncated quotient.
inline Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Integer& d, const Integer& x) {
  if (d == 0) return x == 0;
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline IntVector make_vector(std::initializer_list<long> xs) {
  IntVector v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Divide by the gcd of the entries; the zero vector is returned unchanged.
inline IntVector primitive(IntVector v) {
  Integer g = gcd(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  ensure(a.size() == b.size(), "dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw precondition_error("IntMatrix: ragged rows");
      for (long x : r) data_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw precondition_error("IntMatrix: row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw precondition_error("IntMatrix: column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  IntVector col(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<IntVector> columns() const {
    std::vector<IntVector> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
    return out;
  }
  std::vector<IntVector> row_list() const {
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row_dst += q * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < cols_; ++j)
      mpz_addmul((*this)(dst, j).get_mpz_t(), q.get_mpz_t(), (*this)(src, j).get_mpz_t());
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < rows_; ++i)
      mpz_addmul((*this)(i, dst).get_mpz_t(), q.get_mpz_t(), (*this)(i, src).get_mpz_t());
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    ensure(a.cols_ == b.rows_, "matrix product: dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          mpz_addmul(c(i, j).get_mpz_t(), x.get_mpz_t(), b(k, j).get_mpz_t());
      }
    return c;
  }

  friend IntVector operator*(const IntMatrix& a, const IntVector& v) {
    ensure(a.cols_ == v.size(), "matrix-vector product: dimension mismatch");
    IntVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        mpz_addmul(out[i].get_mpz_t(), a(i, j).get_mpz_t(), v[j].get_mpz_t());
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? "," : "") << '[';
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Fraction-free Gaussian elimination (Bareiss). Returns the determinant.
inline Integer determinant(const IntMatrix& m) {
  require(m.is_square(), "determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

inline IntMatrix submatrix_without(const IntMatrix& m, std::size_t drop_row, std::size_t drop_col) {
  IntMatrix out(m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == drop_row) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == drop_col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

// adj(L)_{i,j} = (-1)^{i+j} times the minor of L with row j and column i removed.
inline IntMatrix adjoint(const IntMatrix& m) {
  require(m.is_square(), "adjoint: matrix is not square");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer d = determinant(submatrix_without(m, j, i));
      adj(i, j) = ((i + j) % 2 == 0) ? d : Integer(-d);
    }
  return adj;
}

struct SnfDecomposition {
  IntMatrix P;
  IntMatrix Q;
  std::vector<Integer> gamma;
  std::size_t rank = 0;
};

namespace detail {

inline std::optional<std::pair<std::size_t, std::size_t>> min_abs_entry(const IntMatrix& d,
                                                                        std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace detail

// P * L * Q = diag(gamma, 0...). Pivots on the entry of least absolute value.
inline SnfDecomposition smith_normal_form(const IntMatrix& L) {
  const std::size_t s = L.rows(), m = L.cols();
  IntMatrix D = L;
  IntMatrix P = IntMatrix::identity(s);
  IntMatrix Qt = IntMatrix::identity(m);  // transposed Q so column ops become row ops
  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
    D.add_row(dst, src, q);
    P.add_row(dst, src, q);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
    D.add_col(dst, src, q);
    Qt.add_row(dst, src, q);
  };
  auto swap_r = [&](std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    P.swap_rows(a, b);
  };
  auto swap_c = [&](std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    Qt.swap_rows(a, b);
  };

  std::size_t t = 0;
  for (; t < std::min(s, m); ++t) {
    auto piv = detail::min_abs_entry(D, t);
    if (!piv) break;
    swap_r(t, piv->first);
    swap_c(t, piv->second);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = tdiv(D(i, t), D(t, t));
        if (q != 0) row_op(i, t, Integer(-q));
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = tdiv(D(t, j), D(t, t));
        if (q != 0) col_op(j, t, Integer(-q));
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest leftover in row/column t onto the diagonal.
        std::size_t bi = t, bj = t;
        Integer best = abs(D(t, t));
        for (std::size_t i = t + 1; i < s; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < best) best = abs(D(i, t)), bi = i, bj = t;
        for (std::size_t j = t + 1; j < m; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < best) best = abs(D(t, j)), bi = t, bj = j;
        swap_r(t, bi);
        swap_c(t, bj);
        continue;
      }
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < s && !bad_row; ++i)
        for (std::size_t j = t + 1; j < m; ++j)
          if (!divides(D(t, t), D(i, j))) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      row_op(t, *bad_row, Integer(1));
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      P.negate_row(t);
    }
  }
  SnfDecomposition out;
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) out.gamma.push_back(D(i, i));
  out.P = std::move(P);
  out.Q = Qt.transpose();
  return out;
}

// Gcd of all i x i minors, via gamma_1 * ... * gamma_i.
inline Integer minor_gcd(const IntMatrix& L, std::size_t i) {
  require(i >= 1 && i <= std::min(L.rows(), L.cols()), "minor_gcd: index out of range");
  SnfDecomposition snf = smith_normal_form(L);
  if (i > snf.rank) return 0;
  Integer prod = 1;
  for (std::size_t k = 0; k < i; ++k) prod *= snf.gamma[k];
  return prod;
}

// Row Hermite normal form: nonzero rows only, positive pivots, entries above a
// pivot reduced into [0, pivot).
inline IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < rows; ++i)
        if (a(i, c) != 0 && (!best || abs(a(i, c)) < abs(a(*best, c)))) best = i;
      if (!best) break;
      a.swap_rows(r, *best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        a.add_row(i, r, Integer(-tdiv(a(i, c), a(r, c))));
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r == rows || a(r, c) == 0) continue;
    if (a(r, c) < 0) a.negate_row(r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer q = fdiv(a(k, c), a(r, c));
      if (q != 0) a.add_row(k, r, Integer(-q));
    }
    pivots.push_back(c);
    ++r;
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return out;
}

// Basis of the saturated integer kernel {x : L x = 0}, in Hermite normal form.
inline std::vector<IntVector> integer_kernel(const IntMatrix& L) {
  SnfDecomposition snf = smith_normal_form(L);
  const std::size_t m = L.cols();
  if (snf.rank == m) return {};
  IntMatrix basis(m - snf.rank, m);
  for (std::size_t k = snf.rank; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i) basis(k - snf.rank, i) = snf.Q(i, k);
  return hermite_normal_form(basis).row_list();
}

// Inverse of a unimodular matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& u) {
  Integer d = determinant(u);
  require(d == 1 || d == -1, "unimodular_inverse: |det| != 1");
  IntMatrix adj = adjoint(u);
  if (d == -1)
    for (std::size_t i = 0; i < adj.rows(); ++i) adj.negate_row(i);
  return adj;
}

}  // namespace binlat
