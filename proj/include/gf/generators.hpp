// The explicit generator cochains a_i, tau_i and the bigraded ring checks.
#ifndef GF_GENERATORS_HPP
#define GF_GENERATORS_HPP

#include <string>
#include <vector>

#include "gf/cocycle_check.hpp"
#include "gf/slice.hpp"
#include "gf/total_cochain.hpp"

namespace gf {

enum class GeneratorKind { A, Tau };

/* a_i: antisymmetrized trace of 2i-1 Jacobians, an O-valued (2i-1)-cochain
 * (bidegree (0, 2i-1)). tau_i: antisymmetrized trace of i wedged Jacobian
 * differentials, an Omega^i-valued i-cochain (bidegree (i, i)). The
 * antisymmetrization carries no 1/k! factor; comparisons against other
 * normalizations are up to a reported nonzero rational. */
struct GeneratorClass {
  GeneratorKind kind;
  int index = 0;  // i, 1-based
  int n = 0;
  ModuleCochain realized;
};

GeneratorClass a_class(int n, int i);
GeneratorClass tau_class(int n, int i);

// Formal product of generators; a-generators must appear with exponent <= 1.
struct ClassMonomial {
  std::vector<int> a_indices;               // each at most once
  std::vector<std::pair<int, int>> tau_pow;  // (i, exponent >= 1)

  int arity(int n) const;        // total q
  int form_degree(int n) const;  // total p
  std::string str() const;
};

// Realize the product in the total complex. A product whose form degree
// exceeds n is identically zero (the relation ideal on the nose); the
// zero element of the right degree is returned.
TotalCochain realize(int n, const ClassMonomial& m);

// Proportionality of two trivial-coefficient cochains on a tuple basis:
// g = lambda * f with lambda nonzero, if such lambda exists.
std::optional<Rational> proportionality(const ModuleCochain& f, const ModuleCochain& g,
                                        const std::vector<CovectorTuple>& basis);

struct ClassReport {
  std::string monomial;
  int q = 0, p = 0;
  bool identically_zero = false;
  CocycleCertificate cocycle;       // total-differential cocycle certificate
  bool exact = false;               // Phi-image exact in the weight-0 slice
  std::optional<ModuleCochain> witness;  // d_w-witness for the Phi image
  std::string note;
};

struct RingReport {
  int n = 0;
  std::vector<ClassReport> classes;
  bool h5_independent = false;  // n = 2: a1*t1^2, a1*t2 independent in H^5
  std::string notes;
};

/* thm-of-coefficients endpoint checks: every listed monomial is a total
 * cocycle; relation monomials (sum i*ell_i > n) have coboundary
 * witnesses; the designated survivors have none and are independent. */
RingReport verify_ring_presentation(int n, std::size_t max_slice_dim = 0,
                                    const CheckConfig& cfg = {});

// The Wronskian 3-cocycle of vect(1) as a reference evaluator (paper
// display), and the scalar lambda with Phi(a1 tau1) = lambda * Wronskian.
ModuleCochain wronskian_cocycle();
Rational wronskian_scalar();

// One basis cochain (c_U)* ox x^beta dx_I of the weight-zero total
// complex, as a sparse evaluator.
struct TotalBasisElement {
  int q = 0, p = 0;
  ModuleCochain cochain;
};

// Every weight-zero basis cochain with q + p = degree and |beta| <= cap.
std::vector<TotalBasisElement> weight_zero_total_basis(int n, int degree, int beta_cap);

struct IdentityReport {
  std::size_t elements_checked = 0;
  bool ok = true;
  std::string failure;
};

// Phi D = d_w Phi as an exact matrix identity over the weight-zero total
// basis in all degrees <= degree_cap (coefficient monomials capped).
IdentityReport chain_map_identity(int n, int degree_cap, int beta_cap);

// i Phi - id = D Psi + Psi D evaluated to zero on the same basis family.
IdentityReport homotopy_identity(int n, int degree_cap, int beta_cap,
                                 const CheckConfig& cfg = {});

}  // namespace gf

#endif
