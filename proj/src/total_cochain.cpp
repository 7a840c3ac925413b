#include "gf/total_cochain.hpp"

#include <stdexcept>

namespace gf {

TotalCochain TotalCochain::from_component(const ModuleCochain& f) {
  TotalCochain t(f.n(), f.arity() + f.form_degree());
  t.add_component(f);
  return t;
}

const ModuleCochain& TotalCochain::component(int q, int p) const {
  auto it = comps_.find({q, p});
  if (it == comps_.end()) throw std::out_of_range("TotalCochain: missing component");
  return it->second;
}

void TotalCochain::add_component(const ModuleCochain& f) {
  if (f.n() != n_) throw std::invalid_argument("TotalCochain: dimension mismatch");
  if (f.arity() + f.form_degree() != degree_)
    throw std::invalid_argument("TotalCochain: total degree mismatch");
  std::pair<int, int> key{f.arity(), f.form_degree()};
  auto it = comps_.find(key);
  if (it == comps_.end())
    comps_.emplace(key, f);
  else
    it->second = lin_comb({{Rational(1), it->second}, {Rational(1), f}});
}

std::optional<int> TotalCochain::weight() const {
  std::optional<int> w;
  bool first = true;
  for (const auto& [k, f] : comps_) {
    if (!f.weight()) return std::nullopt;
    if (first) {
      w = f.weight();
      first = false;
    } else if (w != f.weight()) {
      return std::nullopt;
    }
  }
  return w;
}

int TotalCochain::jet_order() const {
  int j = 0;
  for (const auto& [k, f] : comps_) j = std::max(j, f.jet_order());
  return j;
}

TotalCochain total_differential(const TotalCochain& a) {
  TotalCochain out(a.n(), a.degree() + 1);
  for (const auto& [key, f] : a.components()) {
    auto [q, p] = key;
    out.add_component(ce_differential(f));
    if (f.kind() != CoeffKind::Trivial) {
      ModuleCochain dv = de_rham_on_values(f);
      out.add_component(q % 2 == 0 ? dv : scale(Rational(-1), dv));
    }
  }
  return out;
}

TotalCochain total_cup(const TotalCochain& a, const TotalCochain& b) {
  TotalCochain out(a.n(), a.degree() + b.degree());
  for (const auto& [ka, fa] : a.components())
    for (const auto& [kb, fb] : b.components()) out.add_component(cup_product(fa, fb));
  return out;
}

TotalCochain total_scale(const Rational& c, const TotalCochain& a) {
  TotalCochain out(a.n(), a.degree());
  for (const auto& [k, f] : a.components()) out.add_component(scale(c, f));
  return out;
}

TotalCochain total_sum(const TotalCochain& a, const TotalCochain& b) {
  if (a.degree() != b.degree() || a.n() != b.n())
    throw std::invalid_argument("total_sum: shape mismatch");
  TotalCochain out = a;
  for (const auto& [k, f] : b.components()) out.add_component(f);
  return out;
}

TotalCochain include_total(const ModuleCochain& trivial) {
  return TotalCochain::from_component(include_trivial(trivial));
}

ModuleCochain phi_map(const TotalCochain& a) {
  std::vector<std::pair<Rational, ModuleCochain>> parts;
  for (const auto& [k, f] : a.components()) parts.emplace_back(Rational(1), phi_component(f));
  if (parts.empty()) throw std::invalid_argument("phi_map: empty element");
  return lin_comb(parts);
}

namespace {

// Koszul-adjusted radial primitive: the contraction of the value-direction
// differential. kappa_tilde anticommutes with (-1)^q d_dR exactly.
ModuleCochain kappa_tilde(const ModuleCochain& f) {
  ModuleCochain k = psi_component(f);
  return f.arity() % 2 == 0 ? k : scale(Rational(-1), k);
}

}  // namespace

TotalCochain psi_homotopy(const TotalCochain& a) {
  // Homological perturbation of the fiberwise radial integration: the
  // leading term is the Koszul-signed radial primitive, corrected by
  // d_CE-commutators until the form degree is exhausted. With this Psi the
  // identity i Phi - id = D Psi + Psi D holds on the nose.
  TotalCochain out(a.n(), a.degree() - 1);
  for (const auto& [key, f] : a.components()) {
    if (f.kind() == CoeffKind::Trivial || f.form_degree() == 0) continue;
    ModuleCochain cur = kappa_tilde(f);
    Rational sgn(-1);
    while (true) {
      out.add_component(scale(sgn, cur));
      if (cur.form_degree() == 0) break;
      cur = kappa_tilde(ce_differential(cur));
      sgn = -sgn;
    }
  }
  return out;
}

TotalCochain homotopy_residual(const TotalCochain& a) {
  TotalCochain res = include_total(phi_map(a));
  res = total_sum(res, total_scale(Rational(-1), a));
  res = total_sum(res, total_scale(Rational(-1), total_differential(psi_homotopy(a))));
  res = total_sum(res, total_scale(Rational(-1), psi_homotopy(total_differential(a))));
  return res;
}

}  // namespace gf
