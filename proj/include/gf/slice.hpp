// Finite weight slices of the reduced CE complex with trivial coefficients.
#ifndef GF_SLICE_HPP
#define GF_SLICE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf/cochain.hpp"
#include "gf/exact_linalg.hpp"
#include "gf/vector_field.hpp"

namespace gf {

struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using CovectorTuple = std::vector<MonomialField>;

/* Weight-w slice of reduced C^q(vect(n); C): basis is every strictly
 * increasing q-tuple of covectors whose field weights sum to -w (so the
 * Euler Lie derivative acts by w). For w = 0 this is the finite
 * subcomplex that carries all of the cohomology; covector jet order is
 * automatically <= q there. */
struct ComplexSlice {
  int n = 0, q = 0, w = 0;
  std::vector<CovectorTuple> basis;         // degree q, canonical order
  std::vector<CovectorTuple> target_basis;  // degree q+1, same weight
  SparseMatrix d;                           // |target_basis| x |basis|

  ComplexSlice() : d(0, 0) {}
  std::size_t dim() const { return basis.size(); }
};

ComplexSlice build_slice(int n, int q, int w, std::size_t max_dim = 0);
inline ComplexSlice build_weight_zero_slice(int n, int q, std::size_t max_dim = 0) {
  return build_slice(n, q, 0, max_dim);
}

// Matrix of the Euler contraction (front insertion of E) from degree q to
// q-1 at fixed weight; (1/w) of it is the contracting homotopy off w = 0.
SparseMatrix euler_contraction_matrix(const ComplexSlice& from, const ComplexSlice& to);

// Coordinates of a trivial-coefficient weight-homogeneous cochain in the
// given tuple basis (complete for weight-w cochains of that degree).
RationalVector coordinates(const ModuleCochain& f, const std::vector<CovectorTuple>& basis);

// Cochain from slice coordinates.
ModuleCochain from_coordinates(int n, const std::vector<CovectorTuple>& basis,
                               const RationalVector& x);

struct BettiTable {
  int n = 0;
  int q_max = 0;
  std::string coefficients;  // "trivial (reduced)", "gl-model", "xn-model"
  bool reduced = true;
  std::map<int, std::size_t> dims;  // degree -> dim H^degree
  std::map<int, std::size_t> slice_dims;
  std::string notes;
};

// Reduced Betti numbers of vect(n) in degrees 1..q_max from the
// weight-zero slices. max_slice_dim = 0 means uncapped; otherwise a
// ResourceCapError is thrown when a slice exceeds it.
BettiTable betti(int n, int q_max, std::size_t max_slice_dim = 0,
                 EliminationStats* stats = nullptr);

// dim H^N - witness interface: expand f in the target basis of slice
// (degree N = slice.q + 1) and solve the preimage problem.
std::optional<ModuleCochain> coboundary_witness(const ModuleCochain& f, const ComplexSlice& slice,
                                                EliminationStats* stats = nullptr);

}  // namespace gf

#endif
