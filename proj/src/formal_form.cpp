#include "gf/formal_form.hpp"

#include <sstream>
#include <stdexcept>

namespace gf {

int wedge_sign(FormMask a, FormMask b) {
  if (a & b) return 0;
  int inv = 0;
  for (int i = 0; i < 32; ++i) {
    if (!(b & (1u << i))) continue;
    // bits of a strictly above i must jump over dx_{i+1}
    inv += __builtin_popcount(a & ~((2u << i) - 1));
  }
  return (inv % 2 == 0) ? 1 : -1;
}

int contract_sign(FormMask mask, int i) {
  int below = __builtin_popcount(mask & ((1u << i) - 1));
  return (below % 2 == 0) ? 1 : -1;
}

void FormalForm::add(const FormTerm& t, const Rational& c) {
  if (c.is_zero()) return;
  if (mask_degree(t.mask) != p_) throw std::invalid_argument("FormalForm: wrong term degree");
  auto [it, fresh] = terms_.try_emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalForm& FormalForm::operator+=(const FormalForm& o) {
  if (o.n_ != n_ || o.p_ != p_) throw std::invalid_argument("FormalForm: shape mismatch");
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

FormalForm& FormalForm::operator-=(const FormalForm& o) {
  if (o.n_ != n_ || o.p_ != p_) throw std::invalid_argument("FormalForm: shape mismatch");
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

FormalForm FormalForm::operator*(const Rational& c) const {
  FormalForm out(n_, p_);
  if (c.is_zero()) return out;
  for (const auto& [t, v] : terms_) out.add(t, v * c);
  return out;
}

Rational FormalForm::at_zero() const {
  if (p_ > 0) return Rational(0);
  auto it = terms_.find({mi_zero(n_), 0});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool FormalForm::is_weight_homogeneous(int w) const {
  for (const auto& [t, c] : terms_)
    if (mi_order(t.beta) + p_ != w) return false;
  return true;
}

std::string FormalForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    os << (first ? "" : " + ") << c.str();
    for (std::size_t i = 0; i < t.beta.size(); ++i) {
      if (t.beta[i] == 0) continue;
      os << "*x" << (i + 1);
      if (t.beta[i] > 1) os << "^" << t.beta[i];
    }
    for (int i = 0; i < n_; ++i)
      if (t.mask & (1u << i)) os << "*dx" << (i + 1);
    first = false;
  }
  return os.str();
}

FormalForm wedge(const FormalForm& a, const FormalForm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("wedge: dimension mismatch");
  FormalForm out(a.n(), a.degree() + b.degree());
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) {
      int s = wedge_sign(ta.mask, tb.mask);
      if (s == 0) continue;
      out.add({mi_add(ta.beta, tb.beta), ta.mask | tb.mask}, ca * cb * Rational(s));
    }
  return out;
}

FormalForm de_rham(const FormalForm& w) {
  // d(x^b dx_I) = Sum_j b_j x^{b-e_j} dx_j ^ dx_I
  FormalForm out(w.n(), w.degree() + 1);
  for (const auto& [t, c] : w.terms()) {
    for (int j = 0; j < w.n(); ++j) {
      if (t.beta[j] == 0) continue;
      FormMask dj = 1u << j;
      int s = wedge_sign(dj, t.mask);
      if (s == 0) continue;
      MultiIndex nb = t.beta;
      nb[j] -= 1;
      out.add({nb, dj | t.mask}, c * Rational(t.beta[j] * s));
    }
  }
  return out;
}

FormalForm contract(const MonomialField& x, const FormalForm& w) {
  if (x.n() != w.n()) throw std::invalid_argument("contract: dimension mismatch");
  FormalForm out(w.n(), w.degree() > 0 ? w.degree() - 1 : 0);
  if (w.degree() == 0) return out;  // iota on functions is zero
  FormMask di = 1u << x.dir;
  for (const auto& [t, c] : w.terms()) {
    if (!(t.mask & di)) continue;
    out.add({mi_add(t.beta, x.alpha), t.mask & ~di}, c * Rational(contract_sign(t.mask, x.dir)));
  }
  return out;
}

FormalForm contract(const FormalVectorField& x, const FormalForm& w) {
  FormalForm out(w.n(), w.degree() > 0 ? w.degree() - 1 : 0);
  for (const auto& [m, c] : x.terms()) out += contract(m, w) * c;
  return out;
}

FormalForm lie_derivative(const FormalVectorField& x, const FormalForm& w) {
  FormalForm out = contract(x, de_rham(w));
  if (w.degree() > 0) out += de_rham(contract(x, w));
  return out;
}

FormalForm lie_derivative(const MonomialField& x, const FormalForm& w) {
  return lie_derivative(FormalVectorField(x), w);
}

FormalForm radial_primitive(const FormalForm& w) {
  int p = w.degree();
  FormalForm out(w.n(), p > 0 ? p - 1 : 0);
  if (p == 0) return out;
  for (const auto& [t, c] : w.terms()) {
    int weight = mi_order(t.beta) + p;
    // iota_E(x^beta dx_I) term by term, scaled by 1/weight
    for (int i = 0; i < w.n(); ++i) {
      if (!(t.mask & (1u << i))) continue;
      MultiIndex nb = t.beta;
      nb[i] += 1;
      out.add({nb, t.mask & ~(1u << i)},
              c * Rational(contract_sign(t.mask, i)) / Rational(weight));
    }
  }
  return out;
}

}  // namespace gf
