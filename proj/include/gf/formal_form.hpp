// Formal differential forms with the Cartan calculus (d, iota, Lie).
#ifndef GF_FORMAL_FORM_HPP
#define GF_FORMAL_FORM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "gf/multi_index.hpp"
#include "gf/vector_field.hpp"

namespace gf {

// dx_I factor as a bitmask; bit i set means dx_{i+1} is present.
using FormMask = std::uint32_t;

inline int mask_degree(FormMask m) { return __builtin_popcount(m); }

// Sign of dx_A ^ dx_B -> dx_{A|B} (0 if they overlap): parity of the
// number of pairs a in A, b in B with a > b.
int wedge_sign(FormMask a, FormMask b);

// Sign of extracting dx_i from dx_I, contracting against the leftmost
// slot: (-1)^{#bits of I below i}.
int contract_sign(FormMask mask, int i);

struct FormTerm {
  MultiIndex beta;
  FormMask mask = 0;
  friend bool operator<(const FormTerm& a, const FormTerm& b) {
    if (a.mask != b.mask) return a.mask < b.mask;
    return a.beta < b.beta;
  }
  friend bool operator==(const FormTerm& a, const FormTerm& b) = default;
};

/* Element of Omega^p on the formal n-disk: finite sum of x^beta dx_I with
 * |I| = p. A degree-0 form is just a polynomial function. The Euler weight
 * of a term is |beta| + p. */
class FormalForm {
 public:
  FormalForm(int n, int degree) : n_(n), p_(degree) {}

  static FormalForm scalar(int n, const Rational& c) {
    FormalForm f(n, 0);
    f.add({mi_zero(n), 0}, c);
    return f;
  }
  static FormalForm from_poly(int n, const Poly& poly) {
    FormalForm f(n, 0);
    for (const auto& [m, c] : poly) f.add({m, 0}, c);
    return f;
  }

  int n() const { return n_; }
  int degree() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<FormTerm, Rational>& terms() const { return terms_; }

  void add(const FormTerm& t, const Rational& c);
  FormalForm& operator+=(const FormalForm& o);
  FormalForm& operator-=(const FormalForm& o);
  FormalForm operator*(const Rational& c) const;

  // Constant term of the function part; zero for p > 0. This is the
  // "evaluation at zero" used by the Phi map.
  Rational at_zero() const;

  // True when every term has |beta| + p equal to w.
  bool is_weight_homogeneous(int w) const;

  std::string str() const;

 private:
  int n_, p_;
  std::map<FormTerm, Rational> terms_;
};

FormalForm wedge(const FormalForm& a, const FormalForm& b);
FormalForm de_rham(const FormalForm& w);
FormalForm contract(const MonomialField& x, const FormalForm& w);
FormalForm contract(const FormalVectorField& x, const FormalForm& w);
// L_X = d iota_X + iota_X d, computed exactly via the Cartan formula.
FormalForm lie_derivative(const FormalVectorField& x, const FormalForm& w);
FormalForm lie_derivative(const MonomialField& x, const FormalForm& w);

/* Radial primitive kappa realizing the formal Poincare lemma:
 * kappa(x^beta dx_I) = x^beta iota_E(dx_I) / (|beta| + p) for p >= 1 and
 * kappa = 0 on functions. Exactly fiber integration of the rescaling
 * x -> tx over t in [0,1]. */
FormalForm radial_primitive(const FormalForm& w);

}  // namespace gf

#endif
