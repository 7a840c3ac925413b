// Sparse matrices over the rationals with exact rank / kernel / solve.
#ifndef GF_EXACT_LINALG_HPP
#define GF_EXACT_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gf/rational.hpp"

namespace gf {

using RationalVector = std::vector<Rational>;

/* Immutable sparse matrix over Q. Entries are stored row-major with
 * strictly increasing column indices and no explicit zeros. */
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t k) {
    SparseMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m.add(i, i, Rational(1));
    return m;
  }

  // Accumulates into (r,c); zero results are dropped. Intended for use
  // during construction only.
  void add(std::size_t r, std::size_t c, const Rational& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  Rational at(std::size_t r, std::size_t c) const;
  const std::vector<std::pair<std::size_t, Rational>>& row(std::size_t r) const { return data_[r]; }

  RationalVector apply(const RationalVector& x) const;  // m.x
  SparseMatrix permuted(const std::vector<std::size_t>& row_perm,
                        const std::vector<std::size_t>& col_perm) const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> data_;
};

struct EliminationStats {
  std::size_t max_bits = 0;        // largest integer seen during elimination
  std::size_t pivot_count = 0;
};

std::size_t rank(const SparseMatrix& m, EliminationStats* stats = nullptr);

// Basis of ker(m); size is always cols − rank. Every vector satisfies
// m·v = 0 exactly.
std::vector<RationalVector> kernel_basis(const SparseMatrix& m, EliminationStats* stats = nullptr);

// Some x with m·x = b, or nullopt when b is not in the column span.
// Throws std::invalid_argument when |b| != rows.
std::optional<RationalVector> solve_preimage(const SparseMatrix& m, const RationalVector& b,
                                             EliminationStats* stats = nullptr);

}  // namespace gf

#endif
