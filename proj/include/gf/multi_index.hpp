// Multi-indices and sparse polynomials shared across the formal calculus.
#ifndef GF_MULTI_INDEX_HPP
#define GF_MULTI_INDEX_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf/rational.hpp"

namespace gf {

// Exponent vector; length is the number of variables.
using MultiIndex = std::vector<int>;

inline int mi_order(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0); }

inline MultiIndex mi_zero(int n) { return MultiIndex(n, 0); }

inline MultiIndex mi_unit(int n, int i) {
  MultiIndex a(n, 0);
  a[i] = 1;
  return a;
}

inline MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

// a - b; nullopt-style: returns false when any component would go negative.
inline bool mi_sub(const MultiIndex& a, const MultiIndex& b, MultiIndex& out) {
  out = a;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] -= b[i];
    if (out[i] < 0) return false;
  }
  return true;
}

// Falling-factorial coefficient of d^b(x^a): a!/(a-b)! componentwise.
inline Rational mi_deriv_coeff(const MultiIndex& a, const MultiIndex& b) {
  Rational c(1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) return Rational(0);
    for (int k = 0; k < b[i]; ++k) c *= Rational(a[i] - k);
  }
  return c;
}

inline Rational mi_factorial(const MultiIndex& a) {
  Rational c(1);
  for (int e : a) c *= Rational::factorial((unsigned)e);
  return c;
}

// All multi-indices of length n with total order exactly d, lex order.
std::vector<MultiIndex> mi_enumerate_exact(int n, int d);
// ... and with total order <= d.
std::vector<MultiIndex> mi_enumerate_upto(int n, int d);

/* Sparse polynomial in an arbitrary number of variables over Q. The
 * variable count is implicit in the key length; all keys in one Poly
 * must agree. */
using Poly = std::map<MultiIndex, Rational>;

inline void poly_add_term(Poly& p, const MultiIndex& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& c);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_derivative(const Poly& a, int var);
inline bool poly_is_zero(const Poly& a) { return a.empty(); }
Rational poly_constant_term(const Poly& a);
Poly poly_truncate(const Poly& a, int max_order);
std::string poly_str(const Poly& a, const std::vector<std::string>& vars);

}  // namespace gf

#endif
