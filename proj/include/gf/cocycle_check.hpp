// Exhaustive exact verification of cochain identities on monomial tuples.
#ifndef GF_COCYCLE_CHECK_HPP
#define GF_COCYCLE_CHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include "gf/total_cochain.hpp"

namespace gf {

struct CheckConfig {
  int margin = 1;          // safety margin on the completeness bound
  bool stabilize = true;   // also run at margin+1 and require agreement
  int max_universe = 200;  // cap on the monomial field universe size
};

struct TupleWitness {
  std::vector<MonomialField> tuple;
  std::string value;  // printed nonzero value
  int component_q = 0, component_p = 0;
};

struct CocycleCertificate {
  bool closed = false;
  int jet_order = 0;          // tracked jet order of the checked cochain
  int degree_bound = 0;       // per-slot monomial degree enumerated
  int margin = 0;
  bool stabilized = false;    // no new failures appeared in the margin layer
  std::optional<TupleWitness> witness;
};

/* The completeness bound: a weight-homogeneous polydifferential cochain of
 * jet order s vanishes iff it vanishes on all strictly increasing tuples
 * of monomial fields of per-slot degree <= s (principal-lattice
 * interpolation); the differential raises jet order by at most one, so
 * closedness of f is checked at bound jet(f)+1 plus the margin. */

// Does f vanish on every strictly increasing tuple with per-slot |beta|
// <= degree_bound? Returns the first failing tuple otherwise.
std::optional<TupleWitness> find_nonzero_tuple(const ModuleCochain& f, int degree_bound);

// Certificate that (d_CE + d_dR) f = 0 (total = true) or d_CE f = 0 alone.
CocycleCertificate is_cocycle(const TotalCochain& f, bool total, const CheckConfig& cfg = {});
CocycleCertificate is_cocycle(const ModuleCochain& f, bool total, const CheckConfig& cfg = {});

// Certificate that every component of a total element vanishes identically
// (used for residuals of operator identities).
CocycleCertificate vanishes(const TotalCochain& f, const CheckConfig& cfg = {});

}  // namespace gf

#endif
