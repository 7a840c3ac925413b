// Finite CE complex of gl(n) with exterior-power coefficients.
#ifndef GF_GL_COMPLEX_HPP
#define GF_GL_COMPLEX_HPP

#include "gf/exact_linalg.hpp"
#include "gf/slice.hpp"

namespace gf {

/* H^*(gl(n); Lambda^p (C^n)^*) computed on the full finite CE complex.
 * Through the isomorphism C^*(vect(n); Omega^p) = C^*(gl(n); Lambda^p)
 * this is the gl-model for cohomology with coefficients in forms; at
 * p = 0 it verifies that H^*(vect(n); O) is the exterior algebra on
 * a_1..a_n. */
BettiTable gl_complex_betti(int n, int p, int q_max, EliminationStats* stats = nullptr);

// Differential matrix from degree q to q+1 (exposed for tests).
SparseMatrix gl_ce_matrix(int n, int p, int q);
std::size_t gl_ce_dim(int n, int p, int q);

}  // namespace gf

#endif
