// Continuous Chevalley-Eilenberg cochains of vect(n), evaluation based.
//
// A cochain is an alternating multilinear functional on monomial vector
// fields with values in C (trivial), O, or Omega^p. Structural operations
// (differential, contraction, cup product, the Phi and Psi maps) compose
// evaluators; zero testing and basis expansion happen by exact evaluation
// on monomial tuples.
#ifndef GF_COCHAIN_HPP
#define GF_COCHAIN_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gf/formal_form.hpp"
#include "gf/vector_field.hpp"

namespace gf {

enum class CoeffKind {
  Trivial,  // constant values; evaluation yields a degree-0 constant form
  Forms,    // values in Omega^p (p = 0 is the module O)
};

struct CochainNode;

class ModuleCochain {
 public:
  ModuleCochain() = default;

  int n() const { return n_; }
  int arity() const { return arity_; }
  CoeffKind kind() const { return kind_; }
  int form_degree() const { return p_; }
  // L_E eigenvalue when weight-homogeneous (all engine-built cochains are).
  std::optional<int> weight() const { return weight_; }
  // Max derivative order through which the body sees each input.
  int jet_order() const { return jet_order_; }
  bool valid() const { return node_ != nullptr; }

  // Exact evaluation on a tuple of monomial fields (any order; the
  // alternating normalization happens here and results are memoized).
  FormalForm evaluate(const std::vector<MonomialField>& xs) const;
  // Multilinear extension.
  FormalForm evaluate_fields(const std::vector<FormalVectorField>& xs) const;
  // Constant value of a trivial-coefficient cochain.
  Rational evaluate_scalar(const std::vector<MonomialField>& xs) const;

  static ModuleCochain make(int n, int arity, CoeffKind kind, int p, std::optional<int> weight,
                            int jet_order, std::shared_ptr<const CochainNode> node);

 private:
  int n_ = 0;
  int arity_ = 0;
  CoeffKind kind_ = CoeffKind::Trivial;
  int p_ = 0;
  std::optional<int> weight_;
  int jet_order_ = 0;
  std::shared_ptr<const CochainNode> node_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// ---- constructors ----

ModuleCochain zero_cochain(int n, int arity, CoeffKind kind, int p);

// Dual of a covector tuple, tensored with a coefficient basis element.
// The tuple must be strictly increasing in the canonical order. For
// trivial coefficients pass the scalar 1 form.
ModuleCochain dual_basis_cochain(int n, const std::vector<MonomialField>& tuple,
                                 CoeffKind kind, const FormalForm& value);

// Finitely supported cochain: map from strictly increasing tuples to values.
ModuleCochain sparse_cochain(int n, int arity, CoeffKind kind, int p,
                             const std::map<std::vector<MonomialField>, FormalForm>& terms);

ModuleCochain lin_comb(const std::vector<std::pair<Rational, ModuleCochain>>& parts);
ModuleCochain scale(const Rational& c, const ModuleCochain& f);

// Arbitrary evaluator (test oracles, paper reference formulas).
ModuleCochain cochain_from_function(
    int n, int arity, CoeffKind kind, int p, std::optional<int> weight, int jet_order,
    std::function<FormalForm(const std::vector<MonomialField>&)> fn);

// ---- operations ----

// Chevalley-Eilenberg differential (standard indexing; see README for the
// sign conventions; d.d = 0 is enforced by tests).
ModuleCochain ce_differential(const ModuleCochain& f);

// de Rham differential applied to values: C^q(Omega^p) -> C^q(Omega^{p+1}).
ModuleCochain de_rham_on_values(const ModuleCochain& f);

// Diagonal contraction: C^q(Omega^p) -> C^{q+1}(Omega^{p-1}),
// (iota f)(X_1..X_{q+1}) = Sum_k (-1)^{k+1} iota_{X_k} f(.. X_k omitted ..).
// Throws std::invalid_argument on p = 0 input.
ModuleCochain iota_operator(const ModuleCochain& f);

// Shuffle cup product with the bicomplex Koszul prefactor (-1)^{p_a q_b}.
ModuleCochain cup_product(const ModuleCochain& a, const ModuleCochain& b);

// Trivial-coefficient cochains viewed as constant O-valued ones.
ModuleCochain include_trivial(const ModuleCochain& f);

// Phi on a bidegree-homogeneous element: (1/p!) iota^p then evaluation at
// zero; a trivial-coefficient cochain of arity q+p.
ModuleCochain phi_component(const ModuleCochain& f);

// Psi on a bidegree-homogeneous element: the radial primitive applied to
// values; zero on p = 0.
ModuleCochain psi_component(const ModuleCochain& f);

}  // namespace gf

#endif
