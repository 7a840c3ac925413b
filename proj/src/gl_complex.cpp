#include "gf/gl_complex.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace gf {

namespace {

// gl(n) basis E_{ab} indexed by a*n+b; [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb.
// Module basis: p-subsets S of {0..n-1} as bitmasks, dual exterior power,
// with E_ab . e*_s = -delta_{as} e*_b extended as a derivation.

struct GlBasis {
  int n, p, q;
  std::vector<std::vector<int>> tuples;   // increasing q-tuples of gl indices
  std::vector<std::uint32_t> masks;       // p-subsets
  std::vector<std::pair<std::size_t, std::size_t>> elems;  // (tuple idx, mask idx)
  std::map<std::pair<std::vector<int>, std::uint32_t>, std::size_t> index;
};

void combinations(int total, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if ((int)cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= total - (k - (int)cur.size()); ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

GlBasis build_gl_basis(int n, int p, int q) {
  GlBasis b{n, p, q, {}, {}, {}, {}};
  if (q >= 0 && q <= n * n) combinations(n * n, q, b.tuples);
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (__builtin_popcount(m) == p) b.masks.push_back(m);
  for (std::size_t t = 0; t < b.tuples.size(); ++t)
    for (std::size_t s = 0; s < b.masks.size(); ++s) {
      b.index.emplace(std::make_pair(b.tuples[t], b.masks[s]), b.elems.size());
      b.elems.emplace_back(t, s);
    }
  return b;
}

// [E_i, E_j] as a list of (gl index, coefficient).
std::vector<std::pair<int, int>> gl_bracket(int n, int x, int y) {
  int a = x / n, bb = x % n, c = y / n, d = y % n;
  std::vector<std::pair<int, int>> out;
  if (bb == c) out.emplace_back(a * n + d, 1);
  if (d == a) out.emplace_back(c * n + bb, -1);
  return out;
}

// Masks S with E_x . e*_S containing e*_{rowmask}, with that coefficient.
std::vector<std::pair<std::uint32_t, int>> gl_action_preimage(int n, int x, std::uint32_t rowmask);

// E_x . e*_S as a list of (mask, coefficient).
std::vector<std::pair<std::uint32_t, int>> gl_action(int n, int x, std::uint32_t mask) {
  int a = x / n, b = x % n;
  std::vector<std::pair<std::uint32_t, int>> out;
  if (!(mask & (1u << a))) return out;
  // replace factor e*_a by -e*_b
  if (a == b) {
    out.emplace_back(mask, -1);
    return out;
  }
  if (mask & (1u << b)) return out;
  std::uint32_t nm = (mask & ~(1u << a)) | (1u << b);
  // reposition sign: factors strictly between a and b get jumped over
  int lo = std::min(a, b) + 1, hi = std::max(a, b);
  int between = 0;
  for (int i = lo; i < hi; ++i)
    if (mask & (1u << i)) ++between;
  out.emplace_back(nm, (between % 2 == 0) ? -1 : 1);
  return out;
}

std::vector<std::pair<std::uint32_t, int>> gl_action_preimage(int n, int x, std::uint32_t rowmask) {
  int a = x / n, b = x % n;
  std::vector<std::pair<std::uint32_t, int>> out;
  std::uint32_t colmask;
  if (a == b) {
    if (!(rowmask & (1u << a))) return out;
    colmask = rowmask;
  } else {
    if (!(rowmask & (1u << b)) || (rowmask & (1u << a))) return out;
    colmask = (rowmask & ~(1u << b)) | (1u << a);
  }
  for (const auto& [m, c] : gl_action(n, x, colmask))
    if (m == rowmask) out.emplace_back(colmask, c);
  return out;
}

}  // namespace

std::size_t gl_ce_dim(int n, int p, int q) {
  GlBasis b = build_gl_basis(n, p, q);
  return b.elems.size();
}

SparseMatrix gl_ce_matrix(int n, int p, int q) {
  GlBasis src = build_gl_basis(n, p, q);
  GlBasis dst = build_gl_basis(n, p, q + 1);
  SparseMatrix d(dst.elems.size(), src.elems.size());
  // Row-driven evaluation of the standard CE differential.
  for (std::size_t row = 0; row < dst.elems.size(); ++row) {
    const std::vector<int>& w = dst.tuples[dst.elems[row].first];
    std::uint32_t smask = dst.masks[dst.elems[row].second];
    std::size_t m = w.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        int pair_sign = ((i + j) % 2 == 0) ? 1 : -1;
        std::vector<int> rest;
        for (std::size_t k = 0; k < m; ++k)
          if (k != i && k != j) rest.push_back(w[k]);
        for (const auto& [g, coef] : gl_bracket(n, w[i], w[j])) {
          auto pos = std::lower_bound(rest.begin(), rest.end(), g);
          if (pos != rest.end() && *pos == g) continue;
          std::size_t at = (std::size_t)(pos - rest.begin());
          std::vector<int> u = rest;
          u.insert(u.begin() + (long)at, g);
          auto it = src.index.find(std::make_pair(u, smask));
          if (it == src.index.end()) continue;
          int insert_sign = (at % 2 == 0) ? 1 : -1;
          d.add(row, it->second, Rational(coef * pair_sign * insert_sign));
        }
      }
      // module term: (-1)^{i+1} (1-based) E_{w_i} acting on the value
      std::vector<int> rest;
      for (std::size_t k = 0; k < m; ++k)
        if (k != i) rest.push_back(w[k]);
      int sgn = (i % 2 == 0) ? 1 : -1;
      for (const auto& [nm, coef] : gl_action_preimage(n, w[i], smask)) {
        auto it = src.index.find(std::make_pair(rest, nm));
        if (it == src.index.end()) continue;
        d.add(row, it->second, Rational(coef * sgn));
      }
    }
  }
  return d;
}

BettiTable gl_complex_betti(int n, int p, int q_max, EliminationStats* stats) {
  BettiTable t;
  t.n = n;
  t.q_max = q_max;
  t.coefficients = "gl-model (Lambda^" + std::to_string(p) + ")";
  t.reduced = false;
  std::map<int, std::size_t> ranks, dims;
  for (int q = 0; q <= q_max; ++q) {
    dims[q] = gl_ce_dim(n, p, q);
    ranks[q] = rank(gl_ce_matrix(n, p, q), stats);
    t.slice_dims[q] = dims[q];
  }
  for (int q = 0; q <= q_max; ++q)
    t.dims[q] = dims[q] - ranks[q] - (q > 0 ? ranks[q - 1] : 0);
  t.notes = "full finite CE complex of gl(n)";
  return t;
}

}  // namespace gf
