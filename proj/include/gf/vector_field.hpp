// Monomial vector fields on the formal n-disk and their Lie bracket.
#ifndef GF_VECTOR_FIELD_HPP
#define GF_VECTOR_FIELD_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gf/multi_index.hpp"
#include "gf/rational.hpp"

namespace gf {

/* Basis field x^alpha d/dx_dir. Euler weight is |alpha| - 1. The canonical
 * total order (|alpha|, alpha lex, dir) fixes every basis enumeration and
 * matrix layout in the engine. */
struct MonomialField {
  MultiIndex alpha;
  int dir = 0;  // 0-based direction index

  int n() const { return (int)alpha.size(); }
  int weight() const { return mi_order(alpha) - 1; }
  int jet_order() const { return mi_order(alpha); }

  friend bool operator==(const MonomialField& a, const MonomialField& b) {
    return a.dir == b.dir && a.alpha == b.alpha;
  }
  friend bool operator<(const MonomialField& a, const MonomialField& b) {
    int oa = mi_order(a.alpha), ob = mi_order(b.alpha);
    if (oa != ob) return oa < ob;
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.dir < b.dir;
  }
  std::string str() const;
};

// Finite Q-linear combination of monomial fields, all sharing one n.
class FormalVectorField {
 public:
  explicit FormalVectorField(int n) : n_(n) {}
  FormalVectorField(const MonomialField& m, const Rational& c = Rational(1)) : n_(m.n()) {
    add(m, c);
  }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MonomialField, Rational>& terms() const { return terms_; }

  void add(const MonomialField& m, const Rational& c);
  FormalVectorField& operator+=(const FormalVectorField& o);
  FormalVectorField operator*(const Rational& c) const;

  // True when every term vanishes to order k (all |alpha| >= k+1);
  // membership test for the filtration subalgebras.
  bool vanishes_to_order(int k) const;

  std::string str() const;

 private:
  int n_;
  std::map<MonomialField, Rational> terms_;
};

// [X, Y] = X(Y_j) d_j - Y(X_i) d_i. Throws on mismatched n.
FormalVectorField bracket(const FormalVectorField& x, const FormalVectorField& y);
FormalVectorField bracket(const MonomialField& x, const MonomialField& y);

// Sum_i x_i d_i; grades everything by Euler weight.
FormalVectorField euler_field(int n);

// Matrix A |-> Sum_ij A_ij x_i d_j. Sends commutators to brackets and is
// a section of J(0).
FormalVectorField gl_embedding(const std::vector<std::vector<Rational>>& a);

// All monomial fields with |alpha| <= max_order, canonical order.
std::vector<MonomialField> enumerate_fields(int n, int max_order);
// ... with fixed weight w (|alpha| = w+1).
std::vector<MonomialField> enumerate_fields_of_weight(int n, int w);

}  // namespace gf

#endif
