#include "gf/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gf {

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix::add: index out of range");
  if (v.is_zero()) return;
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix::at: index out of range");
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Rational(0);
}

RationalVector SparseMatrix::apply(const RationalVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("SparseMatrix::apply: dimension mismatch");
  RationalVector y(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
  return y;
}

SparseMatrix SparseMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                    const std::vector<std::size_t>& col_perm) const {
  SparseMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) m.add(row_perm[r], col_perm[c], v);
  return m;
}

namespace {

// One integer row of the working matrix, sorted by column.
using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

void note_bits(EliminationStats* stats, const mpz_class& z) {
  if (!stats) return;
  std::size_t b = mpz_sizeinbase(z.get_mpz_t(), 2);
  if (b > stats->max_bits) stats->max_bits = b;
}

// Divide a row by the gcd of its entries. Keeps growth under control
// without leaving the integers.
void strip_content(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& [c, v] : row) v /= g;
}

const mpz_class* row_coeff(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != row.end() && it->first == col) return &it->second;
  return nullptr;
}

// target := p*target - q*source, both integer rows.
IntRow combine(const IntRow& target, const IntRow& source, const mpz_class& p, const mpz_class& q,
               EliminationStats* stats) {
  IntRow out;
  out.reserve(target.size() + source.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < source.size()) {
    if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
      out.emplace_back(target[i].first, p * target[i].second);
      ++i;
    } else if (i == target.size() || source[j].first < target[i].first) {
      out.emplace_back(source[j].first, -q * source[j].second);
      ++j;
    } else {
      mpz_class v = p * target[i].second - q * source[j].second;
      if (v != 0) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  for (const auto& [c, v] : out) note_bits(stats, v);
  return out;
}

struct Echelon {
  // Pivot rows in elimination order; pivots[k] is the pivot column of rows[k].
  std::vector<IntRow> rows;
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot_col;
};

/* Fraction-free row echelon form: rows are scaled to integers up front,
 * every update is an integer cross-multiplication followed by content
 * stripping. Columns are processed left to right; among the candidate
 * rows for a column the sparsest is picked (ties by lowest index), which
 * is the partial pivoting step. */
Echelon echelonize(const SparseMatrix& m, std::size_t cols, const RationalVector* augment,
                   EliminationStats* stats) {
  std::vector<IntRow> work;
  work.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    for (const auto& [c, v] : m.row(r)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
    if (augment && !(*augment)[r].is_zero())
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), (*augment)[r].den().get_mpz_t());
    IntRow row;
    for (const auto& [c, v] : m.row(r)) {
      mpz_class z = v.num() * (lcm / v.den());
      note_bits(stats, z);
      row.emplace_back(c, std::move(z));
    }
    if (augment && !(*augment)[r].is_zero()) {
      const Rational& v = (*augment)[r];
      row.emplace_back(m.cols(), v.num() * (lcm / v.den()));
    }
    strip_content(row);
    if (!row.empty()) work.push_back(std::move(row));
  }

  Echelon ech;
  ech.is_pivot_col.assign(cols, false);
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t best = work.size();
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (!work[i].empty() && work[i].front().first == col) {
        if (best == work.size() || work[i].size() < work[best].size()) best = i;
      }
    }
    if (best == work.size()) continue;
    IntRow pivot_row = std::move(work[best]);
    work.erase(work.begin() + (long)best);
    const mpz_class p = pivot_row.front().second;
    for (auto& row : work) {
      if (row.empty() || row.front().first != col) continue;
      row = combine(row, pivot_row, p, row.front().second, stats);
      strip_content(row);
    }
    std::erase_if(work, [](const IntRow& r) { return r.empty(); });
    ech.pivots.push_back(col);
    ech.is_pivot_col[col] = true;
    ech.rows.push_back(std::move(pivot_row));
    if (stats) stats->pivot_count++;
  }
  return ech;
}

// Back-substitution: solve the echelon system for x given the value of
// the free variables (already placed in x).
void back_substitute(const Echelon& ech, RationalVector& x) {
  for (std::size_t k = ech.rows.size(); k-- > 0;) {
    const IntRow& row = ech.rows[k];
    std::size_t pc = ech.pivots[k];
    Rational acc(0);
    for (std::size_t t = 1; t < row.size(); ++t)
      acc += Rational(row[t].second) * x[row[t].first];
    x[pc] = -acc / Rational(row.front().second);
  }
}

}  // namespace

std::size_t rank(const SparseMatrix& m, EliminationStats* stats) {
  return echelonize(m, m.cols(), nullptr, stats).pivots.size();
}

std::vector<RationalVector> kernel_basis(const SparseMatrix& m, EliminationStats* stats) {
  Echelon ech = echelonize(m, m.cols(), nullptr, stats);
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (ech.is_pivot_col[f]) continue;
    RationalVector x(m.cols(), Rational(0));
    x[f] = Rational(1);
    back_substitute(ech, x);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RationalVector> solve_preimage(const SparseMatrix& m, const RationalVector& b,
                                             EliminationStats* stats) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_preimage: dimension mismatch");
  // Eliminate [m | b]; a pivot in the augmented column means b is not in
  // the image.
  Echelon ech = echelonize(m, m.cols() + 1, &b, stats);
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols() + 1, Rational(0));
  x[m.cols()] = Rational(-1);  // row·(x, -1) = 0  <=>  m·x = b
  back_substitute(ech, x);
  x.pop_back();
  return x;
}

}  // namespace gf
