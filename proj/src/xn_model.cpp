#include "gf/xn_model.hpp"

#include <algorithm>
#include <sstream>

namespace gf {

int XnMonomial::degree() const {
  int d = 0;
  for (std::size_t i = 0; i < ell.size(); ++i) {
    if (xi_mask & (1u << i)) d += 2 * (int)(i + 1) - 1;
    d += 2 * (int)(i + 1) * ell[i];
  }
  return d;
}

std::string XnMonomial::str() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < ell.size(); ++i)
    if (xi_mask & (1u << i)) {
      os << (any ? "*" : "") << "xi" << (i + 1);
      any = true;
    }
  for (std::size_t i = 0; i < ell.size(); ++i)
    if (ell[i] > 0) {
      os << (any ? "*" : "") << "c" << (i + 1);
      if (ell[i] > 1) os << "^" << ell[i];
      any = true;
    }
  return any ? os.str() : "1";
}

CdgaElement model_differential(int n, const CdgaElement& e) {
  CdgaElement out;
  for (const auto& [m, coef] : e) {
    // d(xi^S c^ell) = sum_{i in S} (-1)^{#j in S below i} xi^{S-i} c^{ell+e_i}
    for (int i = 0; i < n; ++i) {
      if (!(m.xi_mask & (1u << i))) continue;
      XnMonomial t = m;
      t.xi_mask &= ~(1u << i);
      t.ell[i] += 1;
      if (t.chern_weight() > n) continue;  // relation ideal
      int below = __builtin_popcount(m.xi_mask & ((1u << i) - 1));
      Rational c = coef * Rational(below % 2 == 0 ? 1 : -1);
      auto [it, fresh] = out.try_emplace(t, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

std::vector<XnMonomial> model_basis(int n, int degree) {
  std::vector<XnMonomial> out;
  // chern weight <= n bounds every ell_i by n
  std::vector<MultiIndex> ells;
  MultiIndex cur(n, 0);
  auto rec = [&](auto&& self, int pos, int weight_left) -> void {
    if (pos == n) {
      ells.push_back(cur);
      return;
    }
    for (int k = 0; k * (pos + 1) <= weight_left; ++k) {
      cur[pos] = k;
      self(self, pos + 1, weight_left - k * (pos + 1));
    }
    cur[pos] = 0;
  };
  rec(rec, 0, n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    for (const auto& ell : ells) {
      XnMonomial m{mask, ell};
      if (m.degree() == degree) out.push_back(m);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t model_monomial_count(int n) {
  std::size_t ell_count = 0;
  MultiIndex cur(n, 0);
  auto rec = [&](auto&& self, int pos, int weight_left) -> void {
    if (pos == n) {
      ++ell_count;
      return;
    }
    for (int k = 0; k * (pos + 1) <= weight_left; ++k) {
      cur[pos] = k;
      self(self, pos + 1, weight_left - k * (pos + 1));
    }
    cur[pos] = 0;
  };
  rec(rec, 0, n);
  return ((std::size_t)1 << n) * ell_count;
}

BettiTable model_betti(int n, int q_max, EliminationStats* stats) {
  BettiTable t;
  t.n = n;
  t.q_max = q_max;
  t.coefficients = "xn-model";
  t.reduced = false;
  std::map<int, std::size_t> ranks, dims;
  for (int q = 0; q <= q_max; ++q) {
    std::vector<XnMonomial> src = model_basis(n, q);
    std::vector<XnMonomial> dst = model_basis(n, q + 1);
    dims[q] = src.size();
    t.slice_dims[q] = src.size();
    std::map<XnMonomial, std::size_t> row_index;
    for (std::size_t i = 0; i < dst.size(); ++i) row_index.emplace(dst[i], i);
    SparseMatrix d(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      CdgaElement e{{src[col], Rational(1)}};
      for (const auto& [m, c] : model_differential(n, e)) d.add(row_index.at(m), col, c);
    }
    ranks[q] = rank(d, stats);
  }
  for (int q = 0; q <= q_max; ++q)
    t.dims[q] = dims[q] - ranks[q] - (q > 0 ? ranks[q - 1] : 0);
  t.notes = "minimal-model CDGA";
  return t;
}

}  // namespace gf
