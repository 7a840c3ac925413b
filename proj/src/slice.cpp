#include "gf/slice.hpp"

#include <algorithm>

namespace gf {

namespace {

// All strictly increasing q-tuples from the canonically ordered universe
// with field weights summing to target. Weights along the canonical order
// are nondecreasing, which gives the pruning bound.
void enumerate_tuples(const std::vector<MonomialField>& universe, int q, int target,
                      std::vector<CovectorTuple>& out) {
  CovectorTuple cur;
  auto rec = [&](auto&& self, std::size_t start, int remaining_slots, int remaining_weight) -> void {
    if (remaining_slots == 0) {
      if (remaining_weight == 0) out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < universe.size(); ++i) {
      int w = universe[i].weight();
      // all later picks weigh at least w
      if (w * remaining_slots > remaining_weight) break;
      cur.push_back(universe[i]);
      self(self, i + 1, remaining_slots - 1, remaining_weight - w);
      cur.pop_back();
    }
  };
  rec(rec, 0, q, target);
}

std::vector<CovectorTuple> slice_basis(int n, int q, int w) {
  if (q <= 0) return {};
  int target = -w;  // sum of field weights
  // each weight >= -1 and there are q of them, so max single weight
  // is target + (q-1)
  int max_weight = target + (q - 1);
  if (max_weight < -1) return {};
  std::vector<MonomialField> universe = enumerate_fields(n, max_weight + 1);
  std::vector<CovectorTuple> out;
  enumerate_tuples(universe, q, target, out);
  return out;
}

}  // namespace

ComplexSlice build_slice(int n, int q, int w, std::size_t max_dim) {
  ComplexSlice s;
  s.n = n;
  s.q = q;
  s.w = w;
  s.basis = slice_basis(n, q, w);
  s.target_basis = slice_basis(n, q + 1, w);
  if (max_dim > 0 && (s.basis.size() > max_dim || s.target_basis.size() > max_dim))
    throw ResourceCapError("slice dimension exceeds cap");

  std::map<CovectorTuple, std::size_t> col_index;
  for (std::size_t i = 0; i < s.basis.size(); ++i) col_index.emplace(s.basis[i], i);

  SparseMatrix d(s.target_basis.size(), s.basis.size());
  // Row-driven: evaluate the differential of every column cochain on each
  // target tuple via (d f)(W) = sum over bracket pairs.
  for (std::size_t row = 0; row < s.target_basis.size(); ++row) {
    const CovectorTuple& tup = s.target_basis[row];
    std::size_t m = tup.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        FormalVectorField br = bracket(tup[i], tup[j]);
        if (br.is_zero()) continue;
        int pair_sign = ((i + j) % 2 == 0) ? 1 : -1;
        CovectorTuple rest;
        rest.reserve(m - 2);
        for (std::size_t k = 0; k < m; ++k)
          if (k != i && k != j) rest.push_back(tup[k]);
        for (const auto& [mono, coef] : br.terms()) {
          // sorted insert of the bracket monomial into rest
          auto pos = std::lower_bound(rest.begin(), rest.end(), mono);
          if (pos != rest.end() && *pos == mono) continue;  // repeated covector
          std::size_t at = (std::size_t)(pos - rest.begin());
          CovectorTuple u = rest;
          u.insert(u.begin() + (long)at, mono);
          auto it = col_index.find(u);
          if (it == col_index.end()) continue;
          int insert_sign = (at % 2 == 0) ? 1 : -1;
          d.add(row, it->second, coef * Rational(pair_sign * insert_sign));
        }
      }
  }
  s.d = std::move(d);
  return s;
}

SparseMatrix euler_contraction_matrix(const ComplexSlice& from, const ComplexSlice& to) {
  // (iota_E f)(X_1..X_{q-1}) = f(E, X_1, .., X_{q-1}); on dual tuples this
  // sends (c_1..c_q)* to sum over positions of weight-0 covectors.
  SparseMatrix h(to.basis.size(), from.basis.size());
  std::map<CovectorTuple, std::size_t> row_index;
  for (std::size_t i = 0; i < to.basis.size(); ++i) row_index.emplace(to.basis[i], i);
  FormalVectorField e = euler_field(from.n);
  for (std::size_t col = 0; col < from.basis.size(); ++col) {
    const CovectorTuple& tup = from.basis[col];
    for (std::size_t k = 0; k < tup.size(); ++k) {
      // coefficient of tup[k] inside E
      auto it = e.terms().find(tup[k]);
      if (it == e.terms().end()) continue;
      CovectorTuple rest;
      for (std::size_t t = 0; t < tup.size(); ++t)
        if (t != k) rest.push_back(tup[t]);
      auto rit = row_index.find(rest);
      if (rit == row_index.end()) continue;
      int sgn = (k % 2 == 0) ? 1 : -1;  // move slot k to the front
      h.add(rit->second, col, it->second * Rational(sgn));
    }
  }
  return h;
}

RationalVector coordinates(const ModuleCochain& f, const std::vector<CovectorTuple>& basis) {
  RationalVector x;
  x.reserve(basis.size());
  for (const auto& tup : basis) x.push_back(f.evaluate_scalar(tup));
  return x;
}

ModuleCochain from_coordinates(int n, const std::vector<CovectorTuple>& basis,
                               const RationalVector& x) {
  std::map<std::vector<MonomialField>, FormalForm> terms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (x[i].is_zero()) continue;
    terms.emplace(basis[i], FormalForm::scalar(n, x[i]));
  }
  int arity = basis.empty() ? 0 : (int)basis.front().size();
  return sparse_cochain(n, arity, CoeffKind::Trivial, 0, terms);
}

BettiTable betti(int n, int q_max, std::size_t max_slice_dim, EliminationStats* stats) {
  if (q_max < 1) throw std::invalid_argument("betti: q_max must be >= 1");
  BettiTable t;
  t.n = n;
  t.q_max = q_max;
  t.coefficients = "trivial (reduced)";
  t.reduced = true;
  std::map<int, std::size_t> ranks;  // q -> rank d_q
  std::map<int, std::size_t> dims;   // q -> dim C^q
  dims[0] = 0;                       // reduced complex has no constants
  ranks[0] = 0;
  for (int q = 1; q <= q_max; ++q) {
    ComplexSlice s = build_weight_zero_slice(n, q, max_slice_dim);
    dims[q] = s.dim();
    ranks[q] = rank(s.d, stats);
    t.slice_dims[q] = s.dim();
  }
  for (int q = 1; q <= q_max; ++q) t.dims[q] = dims[q] - ranks[q] - ranks[q - 1];
  t.notes = "weight-zero slices; H^0 = 1 (constants) reported separately";
  return t;
}

std::optional<ModuleCochain> coboundary_witness(const ModuleCochain& f, const ComplexSlice& slice,
                                                EliminationStats* stats) {
  if (f.kind() != CoeffKind::Trivial)
    throw std::invalid_argument("coboundary_witness: trivial-coefficient cochains only");
  if (f.arity() != slice.q + 1)
    throw std::invalid_argument("coboundary_witness: degree mismatch with slice target");
  RationalVector b = coordinates(f, slice.target_basis);
  auto x = solve_preimage(slice.d, b, stats);
  if (!x) return std::nullopt;
  return from_coordinates(slice.n, slice.basis, *x);
}

}  // namespace gf
