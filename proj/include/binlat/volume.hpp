#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "binlat/exactmat.hpp"
#include "binlat/lattice.hpp"

namespace binlat {

// conv(points), measured against the lattice of its affine hull.
class LatticePolytope {
 public:
  explicit LatticePolytope(std::vector<IntVector> points) : pts_(std::move(points)) {
    require(!pts_.empty(), "LatticePolytope: no points");
    const std::size_t n = pts_[0].size();
    for (const auto& p : pts_) require(p.size() == n, "LatticePolytope: points of different lengths");
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    std::vector<IntVector> diffs;
    for (std::size_t k = 1; k < pts_.size(); ++k) {
      IntVector d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = pts_[k][i] - pts_[0][i];
      diffs.push_back(std::move(d));
    }
    diff_lattice_ = Lattice(n, std::move(diffs));
  }
  static LatticePolytope from_columns(const IntMatrix& m) { return LatticePolytope(m.columns()); }

  const std::vector<IntVector>& points() const { return pts_; }
  std::size_t ambient_dim() const { return pts_[0].size(); }
  std::size_t dimension() const { return diff_lattice_.rank(); }
  const Lattice& difference_lattice() const { return diff_lattice_; }

 private:
  std::vector<IntVector> pts_;
  Lattice diff_lattice_;
};

namespace detail {

// Placing triangulation of full-dimensional points in Z^r; returns the sum
// of |det| over the simplices, i.e. r! vol.
class PlacingTriangulation {
 public:
  explicit PlacingTriangulation(std::vector<IntVector> pts) : p_(std::move(pts)), r_(p_[0].size()) {}

  Integer volume() {
    if (r_ == 0) return 1;
    std::vector<std::size_t> simplex = initial_simplex();
    Integer total = abs(det_of(simplex));
    // interior reference: (r+1) * centroid of the first simplex
    ref_ = IntVector(r_);
    for (std::size_t v : simplex)
      for (std::size_t i = 0; i < r_; ++i) ref_[i] += p_[v][i];
    for (std::size_t skip = 0; skip <= r_; ++skip) {
      std::vector<std::size_t> f;
      for (std::size_t k = 0; k <= r_; ++k)
        if (k != skip) f.push_back(simplex[k]);
      add_facet(std::move(f));
    }
    std::vector<bool> used(p_.size(), false);
    for (std::size_t v : simplex) used[v] = true;
    for (std::size_t q = 0; q < p_.size(); ++q) {
      if (used[q]) continue;
      total += place(q);
    }
    return total;
  }

 private:
  struct Facet {
    std::vector<std::size_t> v;  // sorted
    int outward;                 // sign of orient(v, q) for q beyond
  };

  std::vector<std::size_t> initial_simplex() const {
    std::vector<std::size_t> chosen{0};
    std::vector<IntVector> rows;
    for (std::size_t q = 1; q < p_.size() && chosen.size() <= r_; ++q) {
      std::vector<IntVector> trial = rows;
      IntVector d(r_);
      for (std::size_t i = 0; i < r_; ++i) d[i] = p_[q][i] - p_[0][i];
      trial.push_back(d);
      if (rank(IntMatrix::from_rows(trial, r_)) == trial.size()) {
        rows = std::move(trial);
        chosen.push_back(q);
      }
    }
    ensure(chosen.size() == r_ + 1, "placing triangulation: points are not full-dimensional");
    return chosen;
  }

  Integer det_of(const std::vector<std::size_t>& s) const {
    IntMatrix m(r_, r_);
    for (std::size_t k = 1; k <= r_; ++k)
      for (std::size_t i = 0; i < r_; ++i) m(k - 1, i) = p_[s[k]][i] - p_[s[0]][i];
    return determinant(m);
  }

  // det[v_1 - v_0, ..., v_{r-1} - v_0, x - v_0] with x given scaled by `scale`.
  int orient(const std::vector<std::size_t>& f, const IntVector& x, const Integer& scale) const {
    IntMatrix m(r_, r_);
    for (std::size_t k = 1; k < r_; ++k)
      for (std::size_t i = 0; i < r_; ++i) m(k - 1, i) = p_[f[k]][i] - p_[f[0]][i];
    for (std::size_t i = 0; i < r_; ++i) m(r_ - 1, i) = x[i] - scale * p_[f[0]][i];
    return ::sgn(determinant(m));
  }

  void add_facet(std::vector<std::size_t> f) {
    std::sort(f.begin(), f.end());
    int inside = orient(f, ref_, Integer(static_cast<unsigned long>(r_ + 1)));
    ensure(inside != 0, "placing triangulation: degenerate facet");
    facets_.push_back(Facet{std::move(f), -inside});
  }

  Integer place(std::size_t q) {
    std::vector<Facet> keep, visible;
    for (auto& f : facets_) {
      if (orient(f.v, p_[q], 1) == f.outward)
        visible.push_back(std::move(f));
      else
        keep.push_back(std::move(f));
    }
    facets_ = std::move(keep);
    if (visible.empty()) return 0;
    Integer added = 0;
    std::map<std::vector<std::size_t>, int> ridges;
    for (const auto& f : visible) {
      std::vector<std::size_t> s = f.v;
      s.push_back(q);
      added += abs(det_of(s));
      for (std::size_t skip = 0; skip < f.v.size(); ++skip) {
        std::vector<std::size_t> r;
        for (std::size_t k = 0; k < f.v.size(); ++k)
          if (k != skip) r.push_back(f.v[k]);
        ++ridges[r];
      }
    }
    for (const auto& [r, count] : ridges)
      if (count == 1) {
        std::vector<std::size_t> nf = r;
        nf.push_back(q);
        add_facet(std::move(nf));
      }
    return added;
  }

  std::vector<IntVector> p_;
  std::size_t r_;
  IntVector ref_;
  std::vector<Facet> facets_;
};

}  // namespace detail

// r! vol(P), with vol taken relative to the affine lattice aff(P) cap Z^n.
inline Integer normalized_volume(const LatticePolytope& P) {
  const std::size_t r = P.dimension();
  if (r == 0) return 1;
  const Lattice sat = saturation(P.difference_lattice());
  const IntVector& base = P.points()[0];
  std::vector<IntVector> coords;
  for (const auto& p : P.points()) {
    IntVector d(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) d[i] = p[i] - base[i];
    auto c = sat.coordinates(d);
    ensure(c.has_value(), "normalized_volume: point outside its affine lattice");
    coords.push_back(std::move(*c));
  }
  return detail::PlacingTriangulation(std::move(coords)).volume();
}

}  // namespace binlat
