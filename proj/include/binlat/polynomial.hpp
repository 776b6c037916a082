#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "binlat/error.hpp"
#include "binlat/ideal.hpp"
#include "binlat/monomial.hpp"

// Sparse polynomials over Q and a plain Buchberger engine. Only the GPCB
// syzygy, hull and embedded-component checks need anything beyond binomials.

namespace binlat {

using Rational = mpq_class;

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t n) : n_(n) {}
  static Polynomial term(const Monomial& m, const Rational& c = 1) {
    Polynomial p(m.size());
    if (c != 0) p.t_.emplace(m, c);
    return p;
  }
  static Polynomial constant(std::size_t n, const Rational& c) { return term(Monomial(n), c); }
  static Polynomial from(const MarkedBinomial& f) {
    Polynomial p = term(f.lead);
    if (f.tail) p -= term(*f.tail);
    return p;
  }

  std::size_t nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  const std::map<Monomial, Rational>& terms() const { return t_; }
  Rational coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rational(0) : it->second;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial p(a.n_);
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) p.add_term(ma * mb, ca * cb);
    return p;
  }
  Polynomial scaled(const Rational& c, const Monomial& m) const {
    Polynomial p(n_);
    if (c == 0) return p;
    for (const auto& [mm, cc] : t_) p.t_.emplace_hint(p.t_.end(), mm * m, cc * c);
    return p;
  }
  Polynomial pow(unsigned k) const {
    Polynomial r = constant(n_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }
  Polynomial resized(std::size_t n) const {
    Polynomial p(n);
    for (const auto& [m, c] : t_) p.add_term(m.resized(n), c);
    return p;
  }
  bool involves(std::size_t var) const {
    return std::any_of(t_.begin(), t_.end(), [&](const auto& tc) { return tc.first[var] > 0; });
  }

  std::pair<Monomial, Rational> leading(const MonomialOrder& ord) const {
    require(!t_.empty(), "Polynomial::leading: zero polynomial");
    auto best = t_.begin();
    for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
      if (ord.greater(it->first, best->first)) best = it;
    return *best;
  }
  Polynomial monic(const MonomialOrder& ord) const {
    if (t_.empty()) return *this;
    Rational inv = 1 / leading(ord).second;
    return scaled(inv, Monomial(n_));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Terms in decreasing GRevLex order.
  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (t_.empty()) return "0";
    std::vector<std::pair<Monomial, Rational>> v(t_.begin(), t_.end());
    MonomialOrder ord = MonomialOrder::grevlex();
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rational c = v[i].second;
      bool neg = c < 0;
      if (neg) c = -c;
      if (i) os << (neg ? " - " : " + ");
      else if (neg) os << '-';
      bool one = v[i].first.is_one();
      if (c != 1 || one) os << c.get_str() << (one ? "" : "*");
      if (!one) os << v[i].first.to_string(names);
    }
    return os.str();
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  std::size_t n_ = 0;
  std::map<Monomial, Rational> t_;
};

namespace detail {

// Working polynomial with terms keyed in decreasing order under `ord`.
class OrderedPoly {
 public:
  struct Cmp {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->greater(a, b); }
  };
  using Map = std::map<Monomial, Rational, Cmp>;

  OrderedPoly(const Polynomial& p, const MonomialOrder& ord) : t_(Cmp{&ord}) {
    for (const auto& [m, c] : p.terms()) t_.emplace(m, c);
  }
  bool empty() const { return t_.empty(); }
  const Monomial& lead() const { return t_.begin()->first; }
  const Rational& lead_coef() const { return t_.begin()->second; }
  Map& map() { return t_; }
  // this -= c * m * g
  void sub(const Rational& c, const Monomial& m, const std::vector<std::pair<Monomial, Rational>>& g) {
    for (const auto& [gm, gc] : g) {
      Monomial x = gm * m;
      Rational v = c * gc;
      auto [it, fresh] = t_.emplace(std::move(x), -v);
      if (!fresh) {
        it->second -= v;
        if (it->second == 0) t_.erase(it);
      }
    }
  }
  Polynomial to_poly(std::size_t n) const {
    Polynomial p(n);
    for (const auto& [m, c] : t_) p += Polynomial::term(m, c);
    return p;
  }

 private:
  Map t_;
};

class PolyBuchberger {
 public:
  PolyBuchberger(std::size_t n, MonomialOrder ord) : n_(n), ord_(std::move(ord)) {}

  void add(const Polynomial& f) {
    if (unit_) return;
    auto h = reduce(f);
    if (!h.is_zero()) insert(std::move(h));
  }

  std::vector<Polynomial> run() {
    while (!unit_ && !pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      Polynomial s = spoly(p);
      auto h = reduce(s);
      if (!h.is_zero()) insert(std::move(h));
    }
    return finish();
  }

 private:
  struct Elem {
    Monomial lead;
    std::vector<std::pair<Monomial, Rational>> terms;  // decreasing, monic
    Polynomial poly;
  };
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

  Polynomial spoly(const Pair& p) const {
    const Elem& f = store_[p.i];
    const Elem& g = store_[p.j];
    return f.poly.scaled(1, p.lcm / f.lead) - g.poly.scaled(1, p.lcm / g.lead);
  }

  // Full reduction modulo the active elements.
  Polynomial reduce(const Polynomial& f) const {
    OrderedPoly w(f, ord_);
    Polynomial out(n_);
    while (!w.empty()) {
      const Monomial m = w.lead();
      const Rational c = w.lead_coef();
      const Elem* hit = nullptr;
      for (std::size_t k = 0; k < store_.size(); ++k)
        if (active_[k] && store_[k].lead.divides(m)) {
          hit = &store_[k];
          break;
        }
      if (hit) {
        w.sub(c, m / hit->lead, hit->terms);
      } else {
        out += Polynomial::term(m, c);
        w.map().erase(w.map().begin());
      }
    }
    return out.monic(ord_);
  }

  void insert(Polynomial h) {
    Elem e;
    e.lead = h.leading(ord_).first;
    for (const auto& tc : h.terms()) e.terms.push_back(tc);
    std::sort(e.terms.begin(), e.terms.end(),
              [&](const auto& a, const auto& b) { return ord_.greater(a.first, b.first); });
    e.poly = std::move(h);
    const std::size_t k = store_.size();
    store_.push_back(std::move(e));
    active_.push_back(false);
    const Monomial& hk = store_[k].lead;
    if (hk.is_one()) {
      unit_ = true;
      return;
    }
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
      bool drop = hk.divides(p.lcm) && Monomial::lcm(store_[p.i].lead, hk) != p.lcm &&
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

  std::vector<Polynomial> finish() {
    if (unit_) return {Polynomial::constant(n_, 1)};
    // Interreduce: reduce each active element by the others.
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < store_.size(); ++k)
      if (active_[k]) idx.push_back(k);
    std::vector<Polynomial> out;
    for (std::size_t k : idx) {
      active_[k] = false;
      out.push_back(reduce(store_[k].poly));
      active_[k] = true;
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord_.compare(a.leading(ord_).first, b.leading(ord_).first) < 0;
    });
    return out;
  }

  std::size_t n_;
  MonomialOrder ord_;
  std::vector<Elem> store_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

}  // namespace detail

// Reduced monic Groebner basis, sorted by increasing leading monomial.
inline std::vector<Polynomial> poly_groebner_basis(std::size_t n, const std::vector<Polynomial>& gens,
                                                   const MonomialOrder& ord) {
  detail::PolyBuchberger engine(n, ord);
  for (const auto& g : gens) {
    require(g.nvars() == n, "poly_groebner_basis: generator has the wrong number of variables");
    engine.add(g);
  }
  return engine.run();
}

// Remainder of f modulo a Groebner basis G under ord.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& ord) {
  std::vector<std::pair<Monomial, std::vector<std::pair<Monomial, Rational>>>> elems;
  for (const auto& g : G) {
    auto lt = g.leading(ord);
    std::vector<std::pair<Monomial, Rational>> terms;
    for (const auto& [m, c] : g.terms()) terms.emplace_back(m, c / lt.second);
    elems.emplace_back(lt.first, std::move(terms));
  }
  detail::OrderedPoly w(f, ord);
  Polynomial out(f.nvars());
  while (!w.empty()) {
    const Monomial m = w.lead();
    const Rational c = w.lead_coef();
    bool hit = false;
    for (const auto& [lead, terms] : elems)
      if (lead.divides(m)) {
        w.sub(c, m / lead, terms);
        hit = true;
        break;
      }
    if (!hit) {
      out += Polynomial::term(m, c);
      w.map().erase(w.map().begin());
    }
  }
  return out;
}

// Exact quotient f / g, or nullopt when g does not divide f.
inline std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  require(!g.is_zero(), "exact_divide: division by zero");
  const MonomialOrder ord = MonomialOrder::grevlex();
  auto [gl, gc] = g.leading(ord);
  Polynomial q(f.nvars()), r = f;
  while (!r.is_zero()) {
    auto [rl, rc] = r.leading(ord);
    if (!gl.divides(rl)) return std::nullopt;
    Polynomial t = Polynomial::term(rl / gl, rc / gc);
    q += t;
    r -= t * g;
  }
  return q;
}

// Ideal of K[t_1..t_n] given by generators; equality via reduced GRevLex bases.
class PolyIdeal {
 public:
  PolyIdeal() = default;
  PolyIdeal(std::size_t n, std::vector<Polynomial> gens) : n_(n), gens_(std::move(gens)) {
    for (const auto& g : gens_) require(g.nvars() == n_, "PolyIdeal: generator has the wrong number of variables");
  }
  static PolyIdeal from(const BinomialIdeal& I) {
    std::vector<Polynomial> g;
    for (const auto& f : I.generators()) g.push_back(Polynomial::from(f));
    return PolyIdeal(I.ambient_dim(), std::move(g));
  }

  std::size_t ambient_dim() const { return n_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& reduced_basis() const {
    if (!basis_) basis_ = poly_groebner_basis(n_, gens_, MonomialOrder::grevlex());
    return *basis_;
  }
  bool is_unit() const {
    const auto& b = reduced_basis();
    return b.size() == 1 && b[0].leading(MonomialOrder::grevlex()).first.is_one();
  }
  bool contains(const Polynomial& f) const {
    return normal_form(f, reduced_basis(), MonomialOrder::grevlex()).is_zero();
  }
  bool contains(const PolyIdeal& J) const {
    return std::all_of(J.gens_.begin(), J.gens_.end(), [&](const Polynomial& f) { return contains(f); });
  }
  friend bool operator==(const PolyIdeal& a, const PolyIdeal& b) {
    return a.n_ == b.n_ && a.reduced_basis() == b.reduced_basis();
  }
  std::string to_string(const std::vector<std::string>& names = {}) const {
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) out += (i ? ", " : "") + gens_[i].to_string(names);
    return out + ")";
  }

 private:
  std::size_t n_ = 0;
  std::vector<Polynomial> gens_;
  // Not shared across threads: PolyIdeal values are local to one computation.
  mutable std::optional<std::vector<Polynomial>> basis_;
};

namespace detail {

// Elements of the reduced basis of (gens) in n+1 variables free of the last one.
inline std::vector<Polynomial> poly_eliminate_last(std::size_t n, const std::vector<Polynomial>& gens) {
  std::vector<bool> block(n + 1, false);
  block[n] = true;
  std::vector<Polynomial> out;
  for (const auto& g : poly_groebner_basis(n + 1, gens, MonomialOrder::eliminate(block)))
    if (!g.involves(n)) out.push_back(g.resized(n));
  return out;
}

}  // namespace detail

// I cap J via y*I + (1-y)*J.
inline PolyIdeal intersect(const PolyIdeal& I, const PolyIdeal& J) {
  require(I.ambient_dim() == J.ambient_dim(), "intersect: ambient dimension mismatch");
  const std::size_t n = I.ambient_dim();
  Polynomial y = Polynomial::term(Monomial::variable(n + 1, n));
  Polynomial one_minus_y = Polynomial::constant(n + 1, 1) - y;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(y * f.resized(n + 1));
  for (const auto& f : J.generators()) gens.push_back(one_minus_y * f.resized(n + 1));
  return PolyIdeal(n, detail::poly_eliminate_last(n, gens));
}

// (I : f) = (I cap (f)) / f.
inline PolyIdeal colon(const PolyIdeal& I, const Polynomial& f) {
  const std::size_t n = I.ambient_dim();
  require(!f.is_zero(), "colon: zero divisor");
  PolyIdeal inter = intersect(I, PolyIdeal(n, {f}));
  std::vector<Polynomial> q;
  for (const auto& g : inter.generators()) {
    auto d = exact_divide(g, f);
    ensure(d.has_value(), "colon: intersection element not divisible");
    q.push_back(std::move(*d));
  }
  return PolyIdeal(n, std::move(q));
}

// (I : f^inf) via w*f - 1.
inline PolyIdeal saturate(const PolyIdeal& I, const Polynomial& f) {
  const std::size_t n = I.ambient_dim();
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.resized(n + 1));
  gens.push_back(Polynomial::term(Monomial::variable(n + 1, n)) * f.resized(n + 1) -
                 Polynomial::constant(n + 1, 1));
  return PolyIdeal(n, detail::poly_eliminate_last(n, gens));
}

}  // namespace binlat
