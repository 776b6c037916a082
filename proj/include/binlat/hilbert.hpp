#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "binlat/monomial.hpp"

namespace binlat {

// Dense univariate polynomial over Z, coefficient i of t^i.
using UPoly = std::vector<Integer>;

namespace detail {

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly upoly_sub(const UPoly& a, const UPoly& b) {
  UPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

inline UPoly upoly_shift(const UPoly& a, std::size_t k) {
  if (a.empty()) return {};
  UPoly c(k, Integer(0));
  c.insert(c.end(), a.begin(), a.end());
  return c;
}

// 1 - t^d
inline UPoly one_minus_power(Exponent d) {
  UPoly p(static_cast<std::size_t>(d) + 1);
  p[0] += 1;
  p[static_cast<std::size_t>(d)] -= 1;
  trim(p);
  return p;
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

// Numerator N of HS(S/J) = N(t) / (1-t)^n for J = (gens), gens minimal.
inline UPoly hilbert_numerator_rec(const std::vector<Monomial>& gens) {
  if (gens.empty()) return UPoly{Integer(1)};
  const std::size_t n = gens[0].size();
  // Pivot on a variable occurring in a generator with support >= 2.
  std::size_t var = n;
  Exponent pivot_exp = 0;
  std::vector<std::size_t> count(n, 0);
  for (const auto& g : gens) {
    std::size_t supp = 0;
    for (std::size_t i = 0; i < n; ++i) supp += g[i] > 0;
    if (supp < 2) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] > 0) ++count[i];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (count[i] > 0 && (var == n || count[i] > count[var])) var = i;
  if (var == n) {
    // Generators are pure powers of distinct variables.
    UPoly p{Integer(1)};
    for (const auto& g : gens) p = upoly_mul(p, one_minus_power(g.degree()));
    return p;
  }
  for (const auto& g : gens) {
    std::size_t supp = 0;
    for (std::size_t i = 0; i < n; ++i) supp += g[i] > 0;
    if (supp >= 2 && g[var] > 0 && (pivot_exp == 0 || g[var] < pivot_exp)) pivot_exp = g[var];
  }
  Monomial p = Monomial::variable(n, var, pivot_exp);
  // HS(J) numerator: N(J + p) + t^{deg p} N(J : p)
  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(g.with(var, std::max<Exponent>(0, g[var] - pivot_exp)));
  UPoly a = hilbert_numerator_rec(minimalize(std::move(plus)));
  UPoly b = hilbert_numerator_rec(minimalize(std::move(colon)));
  UPoly c = upoly_shift(b, static_cast<std::size_t>(pivot_exp));
  UPoly out(std::max(a.size(), c.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < c.size(); ++i) out[i] += c[i];
  trim(out);
  return out;
}

}  // namespace detail

// Numerator of the Hilbert series of K[t_1..t_n]/(gens), over (1-t)^n.
inline UPoly hilbert_numerator(std::vector<Monomial> gens) {
  return detail::hilbert_numerator_rec(detail::minimalize(std::move(gens)));
}

struct HilbertData {
  std::size_t dimension = 0;
  Integer degree = 0;
  UPoly h_numerator;  // g(t) after cancelling (1-t) factors
};

// Krull dimension and degree of K[t_1..t_n]/(gens), standard grading.
inline HilbertData hilbert_data(std::size_t n, std::vector<Monomial> gens) {
  UPoly num = hilbert_numerator(std::move(gens));
  require(!num.empty(), "hilbert_data: unit ideal");
  std::size_t k = n;
  for (;;) {
    Integer at_one = 0;
    for (const auto& c : num) at_one += c;
    if (at_one != 0) break;
    ensure(k > 0, "hilbert_data: numerator divisible by too many (1-t)");
    // synthetic division by (1 - t)
    UPoly q(num.size() - 1);
    Integer carry = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      carry += num[i];
      q[i] = carry;
    }
    num = q;
    --k;
  }
  HilbertData h;
  h.dimension = k;
  for (const auto& c : num) h.degree += c;
  h.h_numerator = num;
  return h;
}

}  // namespace binlat
