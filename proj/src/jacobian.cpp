#include "gf/jacobian.hpp"

namespace gf {

PolyMatrix jacobian_matrix(const FormalVectorField& x) {
  int n = x.n();
  PolyMatrix j(n);
  for (const auto& [m, c] : x.terms()) {
    // term c x^alpha d_{m.dir}: contributes d_i(c x^alpha) to column m.dir
    for (int i = 0; i < n; ++i) {
      if (m.alpha[i] == 0) continue;
      MultiIndex d = m.alpha;
      d[i] -= 1;
      poly_add_term(j.at(i, m.dir), d, c * Rational(m.alpha[i]));
    }
  }
  return j;
}

JacobianSeries jacobian(const FormalVectorField& x, int truncation_order) {
  JacobianSeries js(x.n(), truncation_order);
  PolyMatrix full = jacobian_matrix(x);
  for (int i = 0; i < js.n; ++i)
    for (int j = 0; j < js.n; ++j) js.entries.at(i, j) = poly_truncate(full.at(i, j), truncation_order);
  return js;
}

std::vector<std::vector<Rational>> JacobianSeries::at_zero() const {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = poly_constant_term(entries.at(i, j));
  return m;
}

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix c(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      for (int k = 0; k < a.n; ++k)
        c.at(i, j) = poly_add(c.at(i, j), poly_mul(a.at(i, k), b.at(k, j)));
  return c;
}

Poly poly_mat_trace(const PolyMatrix& m) {
  Poly t;
  for (int i = 0; i < m.n; ++i) t = poly_add(t, m.at(i, i));
  return t;
}

FormMatrix d_jacobian(const FormalVectorField& x) {
  PolyMatrix j = jacobian_matrix(x);
  FormMatrix out(x.n(), 1);
  for (int i = 0; i < out.n; ++i)
    for (int k = 0; k < out.n; ++k)
      out.at(i, k) = de_rham(FormalForm::from_poly(x.n(), j.at(i, k)));
  return out;
}

FormMatrix form_mat_mul(const FormMatrix& a, const FormMatrix& b) {
  int deg = 0;
  if (a.n > 0) deg = a.at(0, 0).degree() + b.at(0, 0).degree();
  FormMatrix c(a.n, deg);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      for (int k = 0; k < a.n; ++k) c.at(i, j) += wedge(a.at(i, k), b.at(k, j));
  return c;
}

FormalForm form_mat_trace(const FormMatrix& m) {
  int deg = m.n > 0 ? m.at(0, 0).degree() : 0;
  FormalForm t(m.n, deg);
  for (int i = 0; i < m.n; ++i) t += m.at(i, i);
  return t;
}

}  // namespace gf
