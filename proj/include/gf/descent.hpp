// Flat-space holomorphic descent: the Dolbeault jet model on C^n.
//
// Cochains of the dg Lie algebra Omega^{0,*}(C^n, T^{1,0}) with polynomial
// coefficients, evaluated on monomial fields z^a zbar^b dzbar_J d/dz_i.
// Evaluations are polynomials in the base point (z, zbar); the descent
// components phi^{i,j} are carried as bodies indexed by (dz_I, dzbar_K)
// masks with the form factor dz_I ^ dzbar_K.
#ifndef GF_DESCENT_HPP
#define GF_DESCENT_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gf/cochain.hpp"
#include "gf/formal_form.hpp"

namespace gf {

// Monomial Dolbeault field. Ghost degree is |ghost|.
struct DolbeaultField {
  MultiIndex a;        // z exponents
  MultiIndex b;        // zbar exponents
  FormMask ghost = 0;  // dzbar_J factor
  int dir = 0;

  int n() const { return (int)a.size(); }
  int ghost_degree() const { return mask_degree(ghost); }
  static DolbeaultField constant_dz(int n, int i) {
    return DolbeaultField{mi_zero(n), mi_zero(n), 0, i};
  }
  friend bool operator<(const DolbeaultField& x, const DolbeaultField& y) {
    if (x.ghost != y.ghost) return x.ghost < y.ghost;
    if (x.dir != y.dir) return x.dir < y.dir;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
  friend bool operator==(const DolbeaultField& x, const DolbeaultField& y) = default;
  std::string str() const;
};

// Finite sum with rational coefficients (brackets, dbar images).
using DolbeaultSum = std::map<DolbeaultField, Rational>;

// [xi, zeta] extending the holomorphic bracket over the dzbar factors.
DolbeaultSum d_bracket(const DolbeaultField& x, const DolbeaultField& y);
// dbar_T xi: the Dolbeault differential of the field.
DolbeaultSum d_bar_field(const DolbeaultField& x);

struct DolbeaultNode;

/* Evaluation-based cochain of the Dolbeault dg Lie algebra; values are
 * polynomials in (z_1..z_n, zbar_1..zbar_n) (variables 0..n-1 and
 * n..2n-1 of a Poly). */
class DolbeaultCochain {
 public:
  DolbeaultCochain() = default;
  int n() const { return n_; }
  int arity() const { return arity_; }
  bool valid() const { return node_ != nullptr; }

  Poly evaluate(const std::vector<DolbeaultField>& xs) const;
  Poly evaluate_sums(const std::vector<DolbeaultSum>& xs) const;

  static DolbeaultCochain make(int n, int arity, std::shared_ptr<const DolbeaultNode> node);

 private:
  int n_ = 0, arity_ = 0;
  std::shared_ptr<const DolbeaultNode> node_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// j*: evaluate a trivial-coefficient vect(n) cochain on holomorphic Taylor
// expansions at the running base point; vanishes on ghost inputs.
DolbeaultCochain j_pullback(const ModuleCochain& f);

// Derivation stripping the dzbar_i factor slotwise (degree -1).
DolbeaultCochain eta_bar(int i, const DolbeaultCochain& f);

// Contraction of the cochain by d/dz_i: the alternating insertion sum
// (arity drops by one).
DolbeaultCochain eta(int i, const DolbeaultCochain& f);

// Chevalley-Eilenberg differential of the dg Lie algebra (bracket part).
DolbeaultCochain d_ce_dolbeault(const DolbeaultCochain& f);

// Internal differential: precomposition with dbar on each slot.
DolbeaultCochain d_bar_T(const DolbeaultCochain& f);

DolbeaultCochain d_lin_comb(const std::vector<std::pair<Rational, DolbeaultCochain>>& parts);

// Base derivative of the evaluation: d/dz_l or d/dzbar_l of the output.
DolbeaultCochain base_dz(int l, const DolbeaultCochain& f);
DolbeaultCochain base_dzbar(int l, const DolbeaultCochain& f);

/* The full descent solution Phi = exp(sum dzbar_i etabar_i + dz_i eta_i)
 * applied to j* phi; bodies keyed by (dz mask, dzbar mask), the form
 * factor being dz_I ^ dzbar_K in ascending order. */
struct DescentSolution {
  int n = 0;
  int top_arity = 0;  // arity of phi
  std::map<std::pair<FormMask, FormMask>, DolbeaultCochain> bodies;

  const DolbeaultCochain& body(FormMask dz, FormMask dzbar) const;
};

DescentSolution descent_solution(const ModuleCochain& phi);

struct DescentCheckConfig {
  int z_degree = -1;     // per-slot |a| bound; -1: jet order + 1
  int zbar_degree = 2;   // per-slot |b| bound
  int margin = 1;
  bool stabilize = true;
};

struct DescentWitness {
  std::string equation;
  std::vector<DolbeaultField> tuple;
  std::string value;
};

struct DescentCertificate {
  bool ok = false;
  int z_degree_bound = 0, zbar_degree_bound = 0;
  long long tuples_checked = 0;
  std::optional<DescentWitness> witness;
};

// Exhaustively verify both descent equation families (and the implied
// vanishing of dbar_T phi^{i,0} and d_CE phi^{0,j}) on all monomial
// Dolbeault tuples within the bounds.
DescentCertificate verify_descent(const DescentSolution& s, const DescentCheckConfig& cfg = {});

}  // namespace gf

#endif
