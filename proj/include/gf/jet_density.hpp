// Translation-invariant polydifferential densities in jet coordinates and
// the variational Euler operator deciding total-divergence equivalence.
#ifndef GF_JET_DENSITY_HPP
#define GF_JET_DENSITY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gf/descent.hpp"

namespace gf {

/* Jet coordinate of one input slot: the alpha-th holomorphic derivative of
 * the coefficient of dzbar_ghost d/dz_dir at the base point. */
struct JetVar {
  int slot = 0;
  int dir = 0;
  FormMask ghost = 0;
  MultiIndex alpha;

  friend bool operator<(const JetVar& x, const JetVar& y) {
    if (x.slot != y.slot) return x.slot < y.slot;
    if (x.dir != y.dir) return x.dir < y.dir;
    if (x.ghost != y.ghost) return x.ghost < y.ghost;
    return x.alpha < y.alpha;
  }
  friend bool operator==(const JetVar& x, const JetVar& y) = default;
  std::string str() const;
};

// Product of jet variables, one per slot, sorted by slot (multilinear).
using JetMonomial = std::vector<JetVar>;
using JetPoly = std::map<JetMonomial, Rational>;

void jet_add_term(JetPoly& p, const JetMonomial& m, const Rational& c);
JetPoly jet_add(const JetPoly& a, const JetPoly& b);
JetPoly jet_scale(const JetPoly& a, const Rational& c);
bool jet_is_zero(const JetPoly& a);
std::string jet_str(const JetPoly& a);

// Total derivative D_{z_l}: bumps derivative indices by the Leibniz rule.
JetPoly jet_total_derivative(const JetPoly& a, int l);

// Variational derivative with respect to the field component
// (slot, dir, ghost): E(L) = sum_alpha (-D)^alpha dL/du_alpha.
JetPoly euler_derivative(const JetPoly& a, int slot, int dir, FormMask ghost);

// A translation-invariant density is a total divergence iff the Euler
// derivative vanishes for every field component of every slot.
bool is_total_divergence(int n, const JetPoly& a);

// Chevalley-Eilenberg differential at the density level: the bracket slot
// expands into bilinear jet terms of the two merged slots; signs match the
// Dolbeault evaluator conventions.
JetPoly jet_ce_differential(int n, int arity, const JetPoly& a);

/* The (n,n)-body of a descent solution as a density. */
struct LocalFunctionalIntegrand {
  int n = 0;
  int arity = 0;
  JetPoly body;
  int jet_bound = 0;       // extraction bound actually used
  bool verified = false;   // re-expansion check at bound + margin passed
};

// Extract the multilinear translation-invariant body of a Dolbeault
// cochain by delta-jet probing, then certify the extraction by
// re-predicting evaluations at degree bound + margin. Throws if the body
// fails translation invariance or exceeds the bound.
LocalFunctionalIntegrand extract_density(const DolbeaultCochain& f, int jet_bound,
                                         int check_margin = 1, int total_ghost = -1);

LocalFunctionalIntegrand delta_integrand(const DescentSolution& s, int jet_bound,
                                         int check_margin = 1);

// Decide L1 = lambda L2 + total divergence, returning lambda when it
// exists (nonzero only when L1 is not itself a divergence).
std::optional<Rational> divergence_equivalent(int n, const JetPoly& a, const JetPoly& b);

}  // namespace gf

#endif
