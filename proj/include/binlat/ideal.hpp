#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "binlat/exactmat.hpp"
#include "binlat/hilbert.hpp"
#include "binlat/lattice.hpp"
#include "binlat/monomial.hpp"

namespace binlat {

// lead - tail, or the monomial `lead` when tail is absent. Coefficients are
// always +-1, so this covers every element the binomial engine produces.
struct MarkedBinomial {
  Monomial lead;
  std::optional<Monomial> tail;

  bool is_monomial() const { return !tail.has_value(); }
  bool is_unit() const { return !tail && lead.is_one(); }
  std::size_t nvars() const { return lead.size(); }

  static MarkedBinomial monomial(Monomial m) { return MarkedBinomial{std::move(m), std::nullopt}; }
  // a - b marked so that the leading term comes first; nullopt when a == b.
  static std::optional<MarkedBinomial> make(const Monomial& a, const Monomial& b,
                                            const MonomialOrder& ord) {
    int c = ord.compare(a, b);
    if (c == 0) return std::nullopt;
    return c > 0 ? MarkedBinomial{a, b} : MarkedBinomial{b, a};
  }
  MarkedBinomial remarked(const MonomialOrder& ord) const {
    if (!tail) return *this;
    return *make(lead, *tail, ord);
  }
  IntVector exponent_vector() const {
    IntVector v(nvars());
    for (std::size_t i = 0; i < nvars(); ++i)
      v[i] = Integer(static_cast<long>(lead[i] - (tail ? (*tail)[i] : 0)));
    return v;
  }
  MarkedBinomial times(const Monomial& m) const {
    return MarkedBinomial{lead * m, tail ? std::optional<Monomial>(*tail * m) : std::nullopt};
  }
  MarkedBinomial resized(std::size_t n) const {
    return MarkedBinomial{lead.resized(n),
                          tail ? std::optional<Monomial>(tail->resized(n)) : std::nullopt};
  }
  bool involves(std::size_t var) const { return lead[var] > 0 || (tail && (*tail)[var] > 0); }

  friend bool operator==(const MarkedBinomial& a, const MarkedBinomial& b) {
    return a.lead == b.lead && a.tail == b.tail;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (!tail) return lead.to_string(names);
    return lead.to_string(names) + " - " + tail->to_string(names);
  }
};

// Pure-difference binomial t^{v+} - t^{v-}; the sign of v is normalized so
// that t^{v+} is the GRevLex-leading term.
class Binomial {
 public:
  explicit Binomial(IntVector v) : v_(std::move(v)) {
    require(!is_zero(v_), "Binomial: zero vector");
    if (MonomialOrder::grevlex().compare(positive_part(v_), negative_part(v_)) < 0)
      for (auto& x : v_) x = -x;
  }
  const IntVector& vector() const { return v_; }
  Monomial plus() const { return positive_part(v_); }
  Monomial minus() const { return negative_part(v_); }
  MarkedBinomial marked() const { return MarkedBinomial{plus(), minus()}; }
  std::string to_string(const std::vector<std::string>& names = {}) const {
    return marked().to_string(names);
  }
  friend bool operator==(const Binomial& a, const Binomial& b) { return a.v_ == b.v_; }

 private:
  IntVector v_;
};

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::size_t n, MonomialOrder ord, std::vector<MarkedBinomial> elems)
      : n_(n), ord_(std::move(ord)), elems_(std::move(elems)) {}

  std::size_t nvars() const { return n_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<MarkedBinomial>& elements() const { return elems_; }
  bool is_unit() const { return elems_.size() == 1 && elems_[0].is_unit(); }
  bool is_zero_ideal() const { return elems_.empty(); }

  // Normal form of a monomial: a monomial, or nullopt for 0.
  std::optional<Monomial> normal_form(Monomial m) const {
    for (;;) {
      const MarkedBinomial* hit = nullptr;
      for (const auto& g : elems_)
        if (g.lead.divides(m)) {
          hit = &g;
          break;
        }
      if (!hit) return m;
      if (hit->is_monomial()) return std::nullopt;
      m = (m / hit->lead) * *hit->tail;
    }
  }
  bool contains(const MarkedBinomial& f) const {
    auto a = normal_form(f.lead);
    if (f.is_monomial()) return !a.has_value();
    return a == normal_form(*f.tail);
  }
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : elems_) out.push_back(g.lead);
    return out;
  }

 private:
  std::size_t n_ = 0;
  MonomialOrder ord_;
  std::vector<MarkedBinomial> elems_;
};

namespace detail {

// Buchberger's algorithm for ideals generated by binomials t^a - t^b and
// monomials; normal selection strategy with the Gebauer-Moeller criteria.
class BinomialBuchberger {
 public:
  BinomialBuchberger(std::size_t n, MonomialOrder ord) : n_(n), ord_(std::move(ord)) {}

  void add(const MarkedBinomial& f) {
    if (unit_) return;
    if (f.is_monomial()) saw_monomial_input_ = true;
    auto h = top_reduce(f.remarked(ord_));
    if (h) insert(std::move(*h));
  }

  GroebnerBasis run() {
    while (!unit_ && !pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      auto s = spoly(store_[p.i], store_[p.j], p.lcm);
      if (!s) continue;
      auto h = top_reduce(std::move(*s));
      if (h) insert(std::move(*h));
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = ord_.compare(a.lcm, b.lcm);
    if (c) return c < 0;
    return std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i);
  }

  std::optional<MarkedBinomial> spoly(const MarkedBinomial& f, const MarkedBinomial& g,
                                      const Monomial& l) const {
    std::optional<Monomial> a, b;
    if (f.tail) a = (l / f.lead) * *f.tail;
    if (g.tail) b = (l / g.lead) * *g.tail;
    if (a && b) return MarkedBinomial::make(*a, *b, ord_);
    if (a) return MarkedBinomial::monomial(*a);
    if (b) return MarkedBinomial::monomial(*b);
    return std::nullopt;
  }

  std::optional<MarkedBinomial> reduce_by(const MarkedBinomial& f, const MarkedBinomial& g) const {
    if (g.is_monomial()) {
      if (f.is_monomial()) return std::nullopt;
      return MarkedBinomial::monomial(*f.tail);
    }
    Monomial nl = (f.lead / g.lead) * *g.tail;
    if (f.is_monomial()) return MarkedBinomial::monomial(std::move(nl));
    return MarkedBinomial::make(nl, *f.tail, ord_);
  }

  std::optional<MarkedBinomial> top_reduce(MarkedBinomial f) const {
    for (;;) {
      const MarkedBinomial* hit = nullptr;
      for (std::size_t k = 0; k < store_.size(); ++k)
        if (active_[k] && store_[k].lead.divides(f.lead)) {
          hit = &store_[k];
          break;
        }
      if (!hit) return f;
      auto r = reduce_by(f, *hit);
      if (!r) return std::nullopt;
      f = std::move(*r);
    }
  }

  void insert(MarkedBinomial h) {
    if (h.is_monomial() && !saw_monomial_input_)
      throw invariant_error("binomial Buchberger: monomial arose from pure-difference input");
    const std::size_t k = store_.size();
    store_.push_back(std::move(h));
    active_.push_back(false);
    const Monomial& hk = store_[k].lead;
    if (hk.is_one()) {
      unit_ = true;
      return;
    }
    // Gebauer-Moeller update.
    std::vector<Pair> C, D;
    for (std::size_t i = 0; i < k; ++i)
      if (active_[i]) C.push_back(Pair{i, k, Monomial::lcm(store_[i].lead, hk)});
    for (std::size_t c = 0; c < C.size(); ++c) {
      const Pair& p = C[c];
      bool keep = hk.coprime(store_[p.i].lead);
      if (!keep) {
        keep = true;
        for (std::size_t c2 = c + 1; c2 < C.size() && keep; ++c2)
          if (C[c2].lcm.divides(p.lcm)) keep = false;
        for (std::size_t d = 0; d < D.size() && keep; ++d)
          if (D[d].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> next;
    for (auto& p : pairs_) {
      bool drop = hk.divides(p.lcm) &&
                  Monomial::lcm(store_[p.i].lead, hk) != p.lcm &&
                  Monomial::lcm(store_[p.j].lead, hk) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : D)
      if (!hk.coprime(store_[p.i].lead)) next.push_back(std::move(p));
    pairs_ = std::move(next);
    for (std::size_t i = 0; i < k; ++i)
      if (active_[i] && hk.divides(store_[i].lead)) active_[i] = false;
    active_[k] = true;
  }

  GroebnerBasis finish() const {
    if (unit_) return GroebnerBasis(n_, ord_, {MarkedBinomial::monomial(Monomial(n_))});
    std::vector<MarkedBinomial> basis;
    for (std::size_t k = 0; k < store_.size(); ++k)
      if (active_[k]) basis.push_back(store_[k]);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      MarkedBinomial& f = basis[k];
      while (f.tail) {
        const MarkedBinomial* hit = nullptr;
        for (std::size_t j = 0; j < basis.size(); ++j)
          if (j != k && basis[j].lead.divides(*f.tail)) {
            hit = &basis[j];
            break;
          }
        if (!hit) break;
        if (hit->is_monomial())
          f.tail.reset();
        else
          f.tail = (*f.tail / hit->lead) * *hit->tail;
      }
    }
    std::sort(basis.begin(), basis.end(), [&](const MarkedBinomial& a, const MarkedBinomial& b) {
      return ord_.compare(a.lead, b.lead) < 0;
    });
    return GroebnerBasis(n_, ord_, std::move(basis));
  }

  std::size_t n_;
  MonomialOrder ord_;
  std::vector<MarkedBinomial> store_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
  bool saw_monomial_input_ = false;
};

}  // namespace detail

inline GroebnerBasis groebner_basis(std::size_t n, const std::vector<MarkedBinomial>& gens,
                                    const MonomialOrder& ord) {
  detail::BinomialBuchberger engine(n, ord);
  for (const auto& g : gens) {
    require(g.nvars() == n, "groebner_basis: generator has the wrong number of variables");
    engine.add(g);
  }
  return engine.run();
}

// Ideal generated by binomials (and, internally, monomials). Reduced bases
// are cached per order; the cache is shared by copies.
class BinomialIdeal {
 public:
  BinomialIdeal() : BinomialIdeal(0, {}) {}
  BinomialIdeal(std::size_t n, std::vector<MarkedBinomial> gens) : n_(n), gens_(std::move(gens)) {
    for (auto& g : gens_) {
      require(g.nvars() == n_, "BinomialIdeal: generator has the wrong number of variables");
      g = g.remarked(MonomialOrder::grevlex());
    }
  }
  static BinomialIdeal from_binomials(std::size_t n, const std::vector<Binomial>& bs) {
    std::vector<MarkedBinomial> gens;
    for (const auto& b : bs) gens.push_back(b.marked());
    return BinomialIdeal(n, std::move(gens));
  }
  static BinomialIdeal from_vectors(std::size_t n, const std::vector<IntVector>& vs) {
    std::vector<MarkedBinomial> gens;
    for (const auto& v : vs) {
      require(v.size() == n, "BinomialIdeal: vector length mismatch");
      gens.push_back(Binomial(v).marked());
    }
    return BinomialIdeal(n, std::move(gens));
  }
  // Ideal whose reduced GRevLex basis is already known.
  static BinomialIdeal with_reduced_basis(std::size_t n, std::vector<MarkedBinomial> basis) {
    BinomialIdeal I(n, basis);
    auto gb = std::make_shared<const GroebnerBasis>(n, MonomialOrder::grevlex(), std::move(basis));
    I.cache_->bases.emplace(MonomialOrder::grevlex(), std::move(gb));
    return I;
  }

  std::size_t ambient_dim() const { return n_; }
  const std::vector<MarkedBinomial>& generators() const { return gens_; }
  bool is_pure_difference() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const MarkedBinomial& g) { return !g.is_monomial(); });
  }

  const GroebnerBasis& groebner_basis(const MonomialOrder& ord = MonomialOrder::grevlex()) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(ord);
    if (it == cache_->bases.end())
      it = cache_->bases
               .emplace(ord, std::make_shared<const GroebnerBasis>(
                                 binlat::groebner_basis(n_, gens_, ord)))
               .first;
    return *it->second;
  }
  const std::vector<MarkedBinomial>& reduced_basis() const { return groebner_basis().elements(); }

  bool is_unit() const { return groebner_basis().is_unit(); }
  bool contains(const MarkedBinomial& f) const { return groebner_basis().contains(f); }
  bool contains(const BinomialIdeal& J) const {
    const GroebnerBasis& gb = groebner_basis();
    return std::all_of(J.gens_.begin(), J.gens_.end(),
                       [&](const MarkedBinomial& g) { return gb.contains(g); });
  }

  friend bool operator==(const BinomialIdeal& a, const BinomialIdeal& b) {
    return a.n_ == b.n_ && a.reduced_basis() == b.reduced_basis();
  }
  friend bool operator!=(const BinomialIdeal& a, const BinomialIdeal& b) { return !(a == b); }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    return list_to_string(gens_, names);
  }
  std::string basis_string(const std::vector<std::string>& names = {}) const {
    return list_to_string(reduced_basis(), names);
  }

  static std::string list_to_string(const std::vector<MarkedBinomial>& v,
                                    const std::vector<std::string>& names) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_string(names);
    os << ')';
    return os.str();
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<MonomialOrder, std::shared_ptr<const GroebnerBasis>> bases;
  };
  std::size_t n_;
  std::vector<MarkedBinomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline BinomialIdeal ideal_sum(const BinomialIdeal& I, const std::vector<MarkedBinomial>& extra) {
  std::vector<MarkedBinomial> gens = I.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return BinomialIdeal(I.ambient_dim(), std::move(gens));
}

// t^{v+} - t^{v-} written in the orientation of v, without GRevLex marking.
inline std::string oriented_string(const IntVector& v, const std::vector<std::string>& names = {}) {
  return positive_part(v).to_string(names) + " - " + negative_part(v).to_string(names);
}

inline std::string oriented_list_string(const std::vector<IntVector>& vs,
                                        const std::vector<std::string>& names = {}) {
  std::string out = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + oriented_string(vs[i], names);
  return out + ")";
}

// One binomial per column t^{l+} - t^{l-}.
inline BinomialIdeal matrix_ideal(const IntMatrix& L) {
  for (std::size_t j = 0; j < L.cols(); ++j)
    require(!is_zero(L.col(j)), "matrix_ideal: zero column gives no binomial");
  return BinomialIdeal::from_vectors(L.rows(), L.columns());
}

namespace detail {

// I(J) intersected with K[t_1..t_n], where J lives in n+1 variables and the
// last one is eliminated. The returned basis is the reduced GRevLex basis.
inline std::vector<MarkedBinomial> eliminate_last(std::size_t n,
                                                  const std::vector<MarkedBinomial>& gens) {
  std::vector<bool> block(n + 1, false);
  block[n] = true;
  GroebnerBasis gb = groebner_basis(n + 1, gens, MonomialOrder::eliminate(block));
  std::vector<MarkedBinomial> kept;
  for (const auto& g : gb.elements())
    if (!g.involves(n)) kept.push_back(g.resized(n));
  return kept;
}

}  // namespace detail

// (I : h^inf) for the monomial h, via one inverse-marker variable w and h*w - 1.
inline BinomialIdeal saturate_by_monomial(const BinomialIdeal& I, const Monomial& h) {
  const std::size_t n = I.ambient_dim();
  if (I.generators().empty() || h.is_one()) return I;
  std::vector<MarkedBinomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.resized(n + 1));
  Monomial hw = h.resized(n + 1).with(n, 1);
  gens.push_back(MarkedBinomial{hw, Monomial(n + 1)});
  return BinomialIdeal::with_reduced_basis(n, detail::eliminate_last(n, gens));
}

// (I : (t_1...t_s)^inf)
inline BinomialIdeal saturate_variables(const BinomialIdeal& I) {
  const std::size_t n = I.ambient_dim();
  return saturate_by_monomial(I, Monomial(std::vector<Exponent>(n, 1)));
}

inline bool is_lattice_ideal(const BinomialIdeal& I) { return I == saturate_variables(I); }

// Lattice ideal I(L) of a lattice.
inline BinomialIdeal lattice_ideal(const Lattice& lat) {
  std::vector<IntVector> gens;
  for (const auto& g : lat.generators())
    if (!is_zero(g)) gens.push_back(g);
  return saturate_variables(BinomialIdeal::from_vectors(lat.ambient_dim(), gens));
}

// (I : g) for a monomial g: I \cap (g) via a tag variable y, from
// y*I + (1-y)*(g) with y eliminated, then divided by g.
inline BinomialIdeal colon_monomial(const BinomialIdeal& I, const Monomial& g) {
  const std::size_t n = I.ambient_dim();
  if (g.is_one()) return I;
  if (I.generators().empty()) return I;
  Monomial y = Monomial::variable(n + 1, n);
  std::vector<MarkedBinomial> gens;
  for (const auto& f : I.generators()) gens.push_back(f.resized(n + 1).times(y));
  Monomial gg = g.resized(n + 1);
  gens.push_back(MarkedBinomial{gg * y, gg});
  std::vector<MarkedBinomial> inter = detail::eliminate_last(n, gens);
  for (auto& f : inter) {
    ensure(g.divides(f.lead) && (!f.tail || g.divides(*f.tail)), "colon_monomial: element not divisible");
    f = MarkedBinomial{f.lead / g, f.tail ? std::optional<Monomial>(*f.tail / g) : std::nullopt};
  }
  return BinomialIdeal::with_reduced_basis(n, std::move(inter));
}

struct ColonSaturation {
  BinomialIdeal saturation;
  std::size_t stabilizing_power = 0;
};

// (I : h^inf) and the least a with (I : h^a) = (I : h^inf).
inline ColonSaturation colon_saturation(const BinomialIdeal& I, const IntVector& h_exponent) {
  require(h_exponent.size() == I.ambient_dim(), "colon_saturation: exponent length mismatch");
  std::vector<Exponent> e;
  for (const auto& x : h_exponent) e.push_back(to_exponent(x));
  Monomial h(std::move(e));
  ColonSaturation out{saturate_by_monomial(I, h), 0};
  BinomialIdeal J = I;
  while (J != out.saturation) {
    J = colon_monomial(J, h);
    ++out.stabilizing_power;
  }
  return out;
}

// Homogenization of the reduced GRevLex basis in one extra variable u.
inline BinomialIdeal homogenize_ideal(const BinomialIdeal& I) {
  const std::size_t n = I.ambient_dim();
  std::vector<MarkedBinomial> gens;
  for (const auto& f : I.reduced_basis()) {
    MarkedBinomial h = f.resized(n + 1);
    if (h.tail) h.tail = h.tail->with(n, f.lead.degree() - f.tail->degree());
    gens.push_back(std::move(h));
  }
  return BinomialIdeal(n + 1, std::move(gens));
}

struct AffineDegree {
  std::size_t dimension = 0;
  Integer degree = 0;
};

// Krull dimension and degree of S/I from the Hilbert series of S[u]/in(I^h).
inline AffineDegree affine_degree(const BinomialIdeal& I) {
  require(!I.is_unit(), "affine_degree: unit ideal");
  BinomialIdeal H = homogenize_ideal(I);
  const GroebnerBasis& gb = H.groebner_basis();
  HilbertData hd = hilbert_data(H.ambient_dim(), gb.leading_monomials());
  ensure(hd.dimension >= 1, "affine_degree: homogenized ring has dimension 0");
  return AffineDegree{hd.dimension - 1, hd.degree};
}

// V(I, t_i) = {0} for every i, decided by ((I + (t_i)) : t_j^inf) = (1).
inline bool vanishing_condition(const BinomialIdeal& I) {
  const std::size_t n = I.ambient_dim();
  for (std::size_t i = 0; i < n; ++i) {
    BinomialIdeal J = ideal_sum(I, {MarkedBinomial::monomial(Monomial::variable(n, i))});
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (!saturate_by_monomial(J, Monomial::variable(n, j)).is_unit()) return false;
    }
  }
  return true;
}

inline bool is_homogeneous(const MarkedBinomial& f, const IntVector& d) {
  return !f.tail || f.lead.weighted_degree(d) == f.tail->weighted_degree(d);
}

// Size of a minimal homogeneous generating set (d-grading).
inline std::size_t minimal_generator_count(const BinomialIdeal& I, const IntVector& d) {
  const std::size_t n = I.ambient_dim();
  require(d.size() == n, "minimal_generator_count: grading length mismatch");
  for (const auto& x : d) require(x > 0, "minimal_generator_count: grading is not positive");
  std::vector<MarkedBinomial> gens = I.generators();
  for (const auto& g : gens)
    require(is_homogeneous(g, d), "minimal_generator_count: non-homogeneous generator " + g.to_string());
  std::stable_sort(gens.begin(), gens.end(), [&](const MarkedBinomial& a, const MarkedBinomial& b) {
    return a.lead.weighted_degree(d) < b.lead.weighted_degree(d);
  });
  std::vector<MarkedBinomial> kept;
  for (const auto& g : gens) {
    if (kept.empty() || !BinomialIdeal(n, kept).contains(g)) kept.push_back(g);
  }
  return kept.size();
}

}  // namespace binlat
