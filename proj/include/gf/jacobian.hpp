// Formal Jacobians and the trace cochain building blocks.
#ifndef GF_JACOBIAN_HPP
#define GF_JACOBIAN_HPP

#include <vector>

#include "gf/formal_form.hpp"
#include "gf/multi_index.hpp"
#include "gf/vector_field.hpp"

namespace gf {

// n x n matrix of polynomials; entry (i,j) of J(X) is d_i f_j for
// X = Sum f_j d_j.
struct PolyMatrix {
  int n = 0;
  std::vector<Poly> e;  // row-major, e[i*n+j]

  explicit PolyMatrix(int n_) : n(n_), e(n_ * n_) {}
  Poly& at(int i, int j) { return e[i * n + j]; }
  const Poly& at(int i, int j) const { return e[i * n + j]; }
};

// Power-series truncation of a Jacobian: entries are polynomials cut at
// an explicit order carried by the caller.
struct JacobianSeries {
  int n = 0;
  int truncation_order = 0;
  PolyMatrix entries;

  JacobianSeries(int n_, int order) : n(n_), truncation_order(order), entries(n_) {}
  // J(0): constant terms.
  std::vector<std::vector<Rational>> at_zero() const;
};

PolyMatrix jacobian_matrix(const FormalVectorField& x);
JacobianSeries jacobian(const FormalVectorField& x, int truncation_order);

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b);
Poly poly_mat_trace(const PolyMatrix& m);

// Matrix of 1-forms dJX; products wedge entrywise.
struct FormMatrix {
  int n = 0;
  std::vector<FormalForm> e;

  explicit FormMatrix(int n_, int degree = 1) : n(n_), e(n_ * n_, FormalForm(n_, degree)) {}
  FormalForm& at(int i, int j) { return e[i * n + j]; }
  const FormalForm& at(int i, int j) const { return e[i * n + j]; }
};

FormMatrix d_jacobian(const FormalVectorField& x);
FormMatrix form_mat_mul(const FormMatrix& a, const FormMatrix& b);
FormalForm form_mat_trace(const FormMatrix& m);

}  // namespace gf

#endif
