// The totalized double complex Tot C^*(vect(n); Omega^*).
#ifndef GF_TOTAL_COCHAIN_HPP
#define GF_TOTAL_COCHAIN_HPP

#include <map>
#include <utility>

#include "gf/cochain.hpp"

namespace gf {

/* Element of the total complex: bigraded components keyed by (q, p),
 * all sharing total degree q + p. The total differential is
 * D = d_CE + (-1)^q d_dR on the (q, p) component. */
class TotalCochain {
 public:
  TotalCochain(int n, int degree) : n_(n), degree_(degree) {}

  static TotalCochain from_component(const ModuleCochain& f);

  int n() const { return n_; }
  int degree() const { return degree_; }
  const std::map<std::pair<int, int>, ModuleCochain>& components() const { return comps_; }
  bool has_component(int q, int p) const { return comps_.count({q, p}) > 0; }
  const ModuleCochain& component(int q, int p) const;

  void add_component(const ModuleCochain& f);

  std::optional<int> weight() const;
  int jet_order() const;

 private:
  int n_, degree_;
  std::map<std::pair<int, int>, ModuleCochain> comps_;
};

TotalCochain total_differential(const TotalCochain& a);
TotalCochain total_cup(const TotalCochain& a, const TotalCochain& b);
TotalCochain total_scale(const Rational& c, const TotalCochain& a);
TotalCochain total_sum(const TotalCochain& a, const TotalCochain& b);

// i: trivial-coefficient cochains into the total complex (constants in O).
TotalCochain include_total(const ModuleCochain& trivial);

// Phi = e^iota ( . ) |_0 summed over components; a trivial cochain of
// arity = total degree.
ModuleCochain phi_map(const TotalCochain& a);

// Psi: radial fiber integration on values, componentwise.
TotalCochain psi_homotopy(const TotalCochain& a);

// i(Phi(a)) - a - D(Psi(a)) - Psi(D(a)): the homotopy-identity residual,
// identically zero when the conventions cohere.
TotalCochain homotopy_residual(const TotalCochain& a);

}  // namespace gf

#endif
