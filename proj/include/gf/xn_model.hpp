// Finite CDGA model whose cohomology equals H^*(vect(n)); the oracle for
// the CE engine's Betti tables.
#ifndef GF_XN_MODEL_HPP
#define GF_XN_MODEL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gf/exact_linalg.hpp"
#include "gf/slice.hpp"

namespace gf {

/* Monomial xi^S c^ell with xi_i odd of degree 2i-1 and c_i even of degree
 * 2i (i = 1..n). Monomials with sum i*ell_i > n are zero in the model. */
struct XnMonomial {
  std::uint32_t xi_mask = 0;  // bit i-1 <-> xi_i
  MultiIndex ell;             // length n

  int degree() const;
  int chern_weight() const { return [this] {
    int s = 0;
    for (std::size_t i = 0; i < ell.size(); ++i) s += (int)(i + 1) * ell[i];
    return s;
  }(); }
  friend bool operator<(const XnMonomial& a, const XnMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.xi_mask != b.xi_mask) return a.xi_mask < b.xi_mask;
    return a.ell < b.ell;
  }
  friend bool operator==(const XnMonomial& a, const XnMonomial& b) = default;
  std::string str() const;
};

using CdgaElement = std::map<XnMonomial, Rational>;

// d = sum_i c_i d/dxi_i with Koszul signs; monomials leaving the ideal
// bound are dropped.
CdgaElement model_differential(int n, const CdgaElement& e);

// All surviving monomials of the given degree, deterministic order.
std::vector<XnMonomial> model_basis(int n, int degree);

BettiTable model_betti(int n, int q_max, EliminationStats* stats = nullptr);

// Total number of surviving monomials: 2^n * #{ell : sum i*ell_i <= n}.
std::size_t model_monomial_count(int n);

}  // namespace gf

#endif
