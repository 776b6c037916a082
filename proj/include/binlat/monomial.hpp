#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "binlat/exactmat.hpp"

namespace binlat {

using Exponent = std::int64_t;

inline Exponent to_exponent(const Integer& x) {
  require(mpz_fits_slong_p(x.get_mpz_t()) != 0, "exponent does not fit in 64 bits");
  return x.get_si();
}

// Exponent vector in N^n with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : e_(n, 0) {}
  explicit Monomial(std::vector<Exponent> e) : e_(std::move(e)) {
    for (Exponent x : e_) {
      require(x >= 0, "Monomial: negative exponent");
      deg_ += x;
    }
  }
  static Monomial variable(std::size_t n, std::size_t i, Exponent power = 1) {
    std::vector<Exponent> e(n, 0);
    e[i] = power;
    return Monomial(std::move(e));
  }

  std::size_t size() const { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  const std::vector<Exponent>& exponents() const { return e_; }
  Exponent degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
    m.deg_ = a.deg_ + b.deg_;
    return m;
  }
  // a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
    m.deg_ = a.deg_ - b.deg_;
    return m;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      m.e_[i] = std::max(a.e_[i], b.e_[i]);
      m.deg_ += m.e_[i];
    }
    return m;
  }
  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      m.e_[i] = std::min(a.e_[i], b.e_[i]);
      m.deg_ += m.e_[i];
    }
    return m;
  }
  Monomial pow(Exponent k) const {
    Monomial m(size());
    for (std::size_t i = 0; i < size(); ++i) m.e_[i] = e_[i] * k;
    m.deg_ = deg_ * k;
    return m;
  }
  // Drop or append variables.
  Monomial resized(std::size_t n) const {
    std::vector<Exponent> e(n, 0);
    for (std::size_t i = 0; i < std::min(n, size()); ++i) e[i] = e_[i];
    return Monomial(std::move(e));
  }
  Monomial with(std::size_t i, Exponent x) const {
    std::vector<Exponent> e = e_;
    e[i] = x;
    return Monomial(std::move(e));
  }
  Integer weighted_degree(const IntVector& d) const {
    Integer s = 0;
    for (std::size_t i = 0; i < size(); ++i) s += d[i] * Integer(static_cast<long>(e_[i]));
    return s;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
  // Container order only; not a monomial order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (deg_ == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (!e_[i]) continue;
      if (!first) os << '*';
      first = false;
      if (i < names.size())
        os << names[i];
      else
        os << 't' << i + 1;
      if (e_[i] > 1) os << '^' << e_[i];
    }
    return os.str();
  }

 private:
  std::vector<Exponent> e_;
  Exponent deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ULL;
    for (Exponent x : m.exponents()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

// u^+ and u^- of an integer vector.
inline Monomial positive_part(const IntVector& v) {
  std::vector<Exponent> e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) e[i] = v[i] > 0 ? to_exponent(v[i]) : 0;
  return Monomial(std::move(e));
}
inline Monomial negative_part(const IntVector& v) {
  std::vector<Exponent> e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) e[i] = v[i] < 0 ? to_exponent(Integer(-v[i])) : 0;
  return Monomial(std::move(e));
}

// GRevLex, or a two-block elimination order: the variables flagged in
// `block` are compared first (GRevLex within the block), then the rest.
class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder(); }
  static MonomialOrder eliminate(std::vector<bool> block) {
    MonomialOrder o;
    o.block_ = std::move(block);
    return o;
  }

  bool is_grevlex() const { return block_.empty(); }
  const std::vector<bool>& block() const { return block_; }
  bool in_block(std::size_t i) const { return i < block_.size() && block_[i]; }

  // Sign of a - b in the order.
  int compare(const Monomial& a, const Monomial& b) const {
    if (block_.empty()) return grevlex_cmp(a, b, nullptr, false);
    int c = grevlex_cmp(a, b, &block_, true);
    if (c) return c;
    return grevlex_cmp(a, b, &block_, false);
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.block_ == b.block_;
  }
  friend bool operator<(const MonomialOrder& a, const MonomialOrder& b) {
    return a.block_ < b.block_;
  }

 private:
  static int grevlex_cmp(const Monomial& a, const Monomial& b, const std::vector<bool>* mask,
                         bool inside) {
    const std::size_t n = a.size();
    auto use = [&](std::size_t i) { return !mask || (i < mask->size() && (*mask)[i]) == inside; };
    Exponent da = 0, db = 0;
    if (!mask) {
      da = a.degree();
      db = b.degree();
    } else {
      for (std::size_t i = 0; i < n; ++i)
        if (use(i)) da += a[i], db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = n; i-- > 0;) {
      if (!use(i) || a[i] == b[i]) continue;
      return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  std::vector<bool> block_;
};

}  // namespace binlat
