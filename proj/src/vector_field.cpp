#include "gf/vector_field.hpp"

#include <sstream>
#include <stdexcept>

namespace gf {

std::vector<MultiIndex> mi_enumerate_exact(int n, int d) {
  std::vector<MultiIndex> out;
  MultiIndex cur(n, 0);
  // lexicographic backtracking over compositions of d into n parts
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      cur[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

std::vector<MultiIndex> mi_enumerate_upto(int n, int d) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= d; ++k) {
    auto v = mi_enumerate_exact(n, k);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly c = a;
  for (const auto& [m, v] : b) poly_add_term(c, m, v);
  return c;
}

Poly poly_scale(const Poly& a, const Rational& c) {
  Poly out;
  if (c.is_zero()) return out;
  for (const auto& [m, v] : a) out.emplace(m, v * c);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c;
  for (const auto& [ma, va] : a)
    for (const auto& [mb, vb] : b) poly_add_term(c, mi_add(ma, mb), va * vb);
  return c;
}

Poly poly_derivative(const Poly& a, int var) {
  Poly c;
  for (const auto& [m, v] : a) {
    if (m[var] == 0) continue;
    MultiIndex d = m;
    d[var] -= 1;
    poly_add_term(c, d, v * Rational(m[var]));
  }
  return c;
}

Rational poly_constant_term(const Poly& a) {
  if (a.empty()) return Rational(0);
  auto it = a.begin();
  if (mi_order(it->first) == 0) return it->second;
  auto f = a.find(mi_zero((int)a.begin()->first.size()));
  return f == a.end() ? Rational(0) : f->second;
}

Poly poly_truncate(const Poly& a, int max_order) {
  Poly c;
  for (const auto& [m, v] : a)
    if (mi_order(m) <= max_order) c.emplace(m, v);
  return c;
}

std::string poly_str(const Poly& a, const std::vector<std::string>& vars) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, v] : a) {
    os << (first ? "" : " + ") << v.str();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << "*" << vars[i];
      if (m[i] > 1) os << "^" << m[i];
    }
    first = false;
  }
  return os.str();
}

std::string MonomialField::str() const {
  std::ostringstream os;
  os << "x^(";
  for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
  os << ")d" << (dir + 1);
  return os.str();
}

void FormalVectorField::add(const MonomialField& m, const Rational& c) {
  if (m.n() != n_) throw std::invalid_argument("FormalVectorField: dimension mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalVectorField& FormalVectorField::operator+=(const FormalVectorField& o) {
  if (o.n_ != n_) throw std::invalid_argument("FormalVectorField: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

FormalVectorField FormalVectorField::operator*(const Rational& c) const {
  FormalVectorField out(n_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.add(m, v * c);
  return out;
}

bool FormalVectorField::vanishes_to_order(int k) const {
  for (const auto& [m, c] : terms_)
    if (mi_order(m.alpha) < k + 1) return false;
  return true;
}

std::string FormalVectorField::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    os << (first ? "" : " + ") << c.str() << "*" << m.str();
    first = false;
  }
  return os.str();
}

FormalVectorField bracket(const MonomialField& x, const MonomialField& y) {
  // [x^a d_i, x^b d_j] = b_i x^{a+b-e_i} d_j - a_j x^{a+b-e_j} d_i
  if (x.n() != y.n()) throw std::invalid_argument("bracket: dimension mismatch");
  FormalVectorField out(x.n());
  MultiIndex sum = mi_add(x.alpha, y.alpha);
  if (y.alpha[x.dir] > 0) {
    MultiIndex m = sum;
    m[x.dir] -= 1;
    out.add({m, y.dir}, Rational(y.alpha[x.dir]));
  }
  if (x.alpha[y.dir] > 0) {
    MultiIndex m = sum;
    m[y.dir] -= 1;
    out.add({m, x.dir}, Rational(-x.alpha[y.dir]));
  }
  return out;
}

FormalVectorField bracket(const FormalVectorField& x, const FormalVectorField& y) {
  if (x.n() != y.n()) throw std::invalid_argument("bracket: dimension mismatch");
  FormalVectorField out(x.n());
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) out += bracket(mx, my) * (cx * cy);
  return out;
}

FormalVectorField euler_field(int n) {
  FormalVectorField e(n);
  for (int i = 0; i < n; ++i) e.add({mi_unit(n, i), i}, Rational(1));
  return e;
}

FormalVectorField gl_embedding(const std::vector<std::vector<Rational>>& a) {
  int n = (int)a.size();
  FormalVectorField out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.add({mi_unit(n, i), j}, a[i][j]);
  return out;
}

std::vector<MonomialField> enumerate_fields(int n, int max_order) {
  std::vector<MonomialField> out;
  for (int d = 0; d <= max_order; ++d)
    for (const auto& m : mi_enumerate_exact(n, d))
      for (int i = 0; i < n; ++i) out.push_back({m, i});
  return out;
}

std::vector<MonomialField> enumerate_fields_of_weight(int n, int w) {
  std::vector<MonomialField> out;
  if (w + 1 < 0) return out;
  for (const auto& m : mi_enumerate_exact(n, w + 1))
    for (int i = 0; i < n; ++i) out.push_back({m, i});
  return out;
}

}  // namespace gf
