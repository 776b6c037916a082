#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "binlat/exactmat.hpp"
#include "binlat/ideal.hpp"
#include "binlat/lattice.hpp"

namespace binlat {

// Simple undirected graph on vertices 0..s-1 with positive integer weights.
class WeightedGraph {
 public:
  explicit WeightedGraph(std::size_t s = 0) : s_(s) {}

  void add_edge(std::size_t i, std::size_t j, const Integer& w) {
    require(i < s_ && j < s_, "WeightedGraph: vertex out of range");
    require(i != j, "WeightedGraph: loops are not allowed");
    require(w >= 1, "WeightedGraph: weights must be positive");
    auto key = std::minmax(i, j);
    require(!edges_.count(key), "WeightedGraph: repeated edge");
    edges_.emplace(key, w);
  }

  std::size_t vertex_count() const { return s_; }
  const std::map<std::pair<std::size_t, std::size_t>, Integer>& edges() const { return edges_; }
  std::size_t degree(std::size_t v) const {
    std::size_t d = 0;
    for (const auto& [e, w] : edges_) d += (e.first == v) + (e.second == v);
    return d;
  }
  bool connected() const {
    if (s_ == 0) return false;
    std::vector<std::size_t> parent(s_);
    for (std::size_t i = 0; i < s_; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t parts = s_;
    for (const auto& [e, w] : edges_) {
      std::size_t a = find(e.first), b = find(e.second);
      if (a != b) {
        parent[a] = b;
        --parts;
      }
    }
    return parts == 1;
  }
  bool is_complete() const { return edges_.size() == s_ * (s_ - 1) / 2; }

 private:
  std::size_t s_;
  std::map<std::pair<std::size_t, std::size_t>, Integer> edges_;
};

// Digraph on 0..s-1; arcs (i, j) with positive weights. Loops only when
// allowed (underlying digraphs of matrices).
class WeightedDigraph {
 public:
  explicit WeightedDigraph(std::size_t s = 0, bool allow_loops = false) : s_(s), loops_(allow_loops) {}

  void add_arc(std::size_t i, std::size_t j, const Integer& w) {
    require(i < s_ && j < s_, "WeightedDigraph: vertex out of range");
    require(loops_ || i != j, "WeightedDigraph: loops are not allowed");
    require(w >= 1, "WeightedDigraph: weights must be positive");
    require(!arcs_.count({i, j}), "WeightedDigraph: repeated arc");
    arcs_.emplace(std::make_pair(i, j), w);
  }

  std::size_t vertex_count() const { return s_; }
  bool allows_loops() const { return loops_; }
  const std::map<std::pair<std::size_t, std::size_t>, Integer>& arcs() const { return arcs_; }
  bool has_arc(std::size_t i, std::size_t j) const { return arcs_.count({i, j}) > 0; }

 private:
  std::size_t s_;
  bool loops_;
  std::map<std::pair<std::size_t, std::size_t>, Integer> arcs_;
};

inline bool strongly_connected(const WeightedDigraph& G) {
  const std::size_t s = G.vertex_count();
  if (s == 0) return false;
  auto reach_all = [&](bool reverse) {
    std::vector<bool> seen(s, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (const auto& [a, w] : G.arcs()) {
        std::size_t from = reverse ? a.second : a.first, to = reverse ? a.first : a.second;
        if (from == v && !seen[to]) {
          seen[to] = true;
          stack.push_back(to);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reach_all(false) && reach_all(true);
}

// D(G) - A(G)
inline IntMatrix laplacian(const WeightedGraph& G) {
  const std::size_t s = G.vertex_count();
  IntMatrix L(s, s);
  for (const auto& [e, w] : G.edges()) {
    L(e.first, e.second) -= w;
    L(e.second, e.first) -= w;
    L(e.first, e.first) += w;
    L(e.second, e.second) += w;
  }
  return L;
}

// D^+(G) - A(G): out-degrees on the diagonal, rows sum to zero.
inline IntMatrix laplacian_digraph(const WeightedDigraph& G) {
  const std::size_t s = G.vertex_count();
  IntMatrix L(s, s);
  for (const auto& [a, w] : G.arcs()) {
    if (a.first == a.second) continue;
    L(a.first, a.second) -= w;
    L(a.first, a.first) += w;
  }
  return L;
}

inline void require_connected(const WeightedGraph& G, const char* what) {
  require(G.connected(), std::string(what) + ": graph is not connected");
}

inline FiniteAbelianGroup sandpile_group(const WeightedGraph& G) {
  require_connected(G, "sandpile_group");
  return critical_group(Lattice::from_columns(laplacian(G)));
}

// Weighted spanning-tree count, as any cofactor of L(G).
inline Integer spanning_tree_count(const WeightedGraph& G) {
  require_connected(G, "spanning_tree_count");
  IntMatrix L = laplacian(G);
  if (G.vertex_count() == 1) return 1;
  IntMatrix adj = adjoint(L);
  const Integer t = adj(0, 0);
  for (std::size_t i = 0; i < adj.rows(); ++i)
    for (std::size_t j = 0; j < adj.cols(); ++j) ensure(adj(i, j) == t, "spanning_tree_count: cofactors differ");
  ensure(t == minor_gcd(L, L.rows() - 1) || t == 0, "spanning_tree_count: cofactor is not the minor gcd");
  ensure(t == sandpile_group(G).order(), "spanning_tree_count: cofactor differs from the sandpile order");
  return t;
}

inline BinomialIdeal laplacian_ideal(const WeightedGraph& G) { return matrix_ideal(laplacian(G)); }

// (I(L(G)) : (t_1...t_s)^inf)
inline BinomialIdeal toppling_ideal(const WeightedGraph& G) {
  require_connected(G, "toppling_ideal");
  return saturate_variables(laplacian_ideal(G));
}

struct LaplacianReport {
  std::size_t vertices = 0;
  FiniteAbelianGroup sandpile;
  Integer spanning_trees;
  bool vanishing = false;              // V(I, t_i) = {0} for all i
  Integer laplacian_degree;            // deg S/I
  Integer toppling_degree;             // deg S/I(L)
  BinomialIdeal toppling;              // I(L), reduced basis
  BinomialIdeal hull;                  // (I : (t_1...t_s)^inf) by iterated colons
  std::size_t stabilizing_power = 0;
  bool hull_is_toppling = false;
  bool all_degrees_at_least_3 = false; // graph-level hypothesis
  bool all_supports_at_least_4 = false;// binomial-level hypothesis
  std::optional<bool> lattice_ideal;   // computed when either hypothesis holds
  bool all_degrees_at_least_2 = false;
  std::optional<std::size_t> minimal_generators;  // computed when all degrees >= 2
  bool hypotheses_agree() const { return all_degrees_at_least_3 == all_supports_at_least_4; }
};

inline LaplacianReport laplacian_report(const WeightedGraph& G) {
  require_connected(G, "laplacian_report");
  const std::size_t s = G.vertex_count();
  LaplacianReport r;
  r.vertices = s;
  r.sandpile = sandpile_group(G);
  r.spanning_trees = spanning_tree_count(G);
  IntMatrix L = laplacian(G);
  if (s == 1) {
    r.vanishing = true;
    r.laplacian_degree = r.toppling_degree = 1;
    r.toppling = r.hull = BinomialIdeal(1, {});
    r.hull_is_toppling = true;
    return r;
  }
  BinomialIdeal I = matrix_ideal(L);
  r.vanishing = vanishing_condition(I);
  r.laplacian_degree = affine_degree(I).degree;
  r.toppling = saturate_variables(I);
  r.toppling_degree = affine_degree(r.toppling).degree;
  auto cs = colon_saturation(I, IntVector(s, Integer(1)));
  r.hull = cs.saturation;
  r.stabilizing_power = cs.stabilizing_power;
  r.hull_is_toppling = r.hull == r.toppling;
  r.all_degrees_at_least_3 = r.all_supports_at_least_4 = r.all_degrees_at_least_2 = true;
  for (std::size_t i = 0; i < s; ++i) {
    if (G.degree(i) < 3) r.all_degrees_at_least_3 = false;
    if (G.degree(i) < 2) r.all_degrees_at_least_2 = false;
    std::size_t supp = 0;
    for (std::size_t k = 0; k < s; ++k) supp += L(k, i) != 0;
    if (supp < 4) r.all_supports_at_least_4 = false;
  }
  if (r.all_degrees_at_least_3 || r.all_supports_at_least_4) r.lattice_ideal = is_lattice_ideal(I);
  if (r.all_degrees_at_least_2) r.minimal_generators = minimal_generator_count(I, IntVector(s, Integer(1)));
  return r;
}

}  // namespace binlat
