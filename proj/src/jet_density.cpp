#include "gf/jet_density.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gf {

std::string JetVar::str() const {
  std::ostringstream os;
  os << "u" << (slot + 1) << "[d" << (dir + 1);
  if (ghost) {
    os << ",";
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (ghost & (1u << i)) os << "zb" << (i + 1);
  }
  os << "](";
  for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
  os << ")";
  return os.str();
}

void jet_add_term(JetPoly& p, const JetMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  JetMonomial key = m;  // jet variables commute; keys are slot-sorted
  std::sort(key.begin(), key.end());
  auto [it, fresh] = p.try_emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

JetPoly jet_add(const JetPoly& a, const JetPoly& b) {
  JetPoly c = a;
  for (const auto& [m, v] : b) jet_add_term(c, m, v);
  return c;
}

JetPoly jet_scale(const JetPoly& a, const Rational& c) {
  JetPoly out;
  if (c.is_zero()) return out;
  for (const auto& [m, v] : a) out.emplace(m, v * c);
  return out;
}

bool jet_is_zero(const JetPoly& a) { return a.empty(); }

std::string jet_str(const JetPoly& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a) {
    os << (first ? "" : " + ") << c.str();
    for (const auto& v : m) os << "*" << v.str();
    first = false;
  }
  return os.str();
}

JetPoly jet_total_derivative(const JetPoly& a, int l) {
  JetPoly out;
  for (const auto& [m, c] : a) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      JetMonomial b = m;
      b[k].alpha[l] += 1;
      jet_add_term(out, b, c);
    }
  }
  return out;
}

namespace {

JetPoly jet_total_derivative_multi(const JetPoly& a, const MultiIndex& alpha) {
  JetPoly out = a;
  for (std::size_t l = 0; l < alpha.size(); ++l)
    for (int k = 0; k < alpha[l]; ++k) out = jet_total_derivative(out, (int)l);
  return out;
}

}  // namespace

JetPoly euler_derivative(const JetPoly& a, int slot, int dir, FormMask ghost) {
  // bucket dL/du_alpha by alpha, then sum (-D)^alpha over buckets
  std::map<MultiIndex, JetPoly> buckets;
  for (const auto& [m, c] : a) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      const JetVar& v = m[k];
      if (v.slot != slot || v.dir != dir || v.ghost != ghost) continue;
      JetMonomial rest = m;
      rest.erase(rest.begin() + (long)k);
      jet_add_term(buckets[v.alpha], rest, c);
    }
  }
  JetPoly out;
  for (const auto& [alpha, p] : buckets) {
    JetPoly d = jet_total_derivative_multi(p, alpha);
    out = jet_add(out, mi_order(alpha) % 2 == 0 ? d : jet_scale(d, Rational(-1)));
  }
  return out;
}

bool is_total_divergence(int n, const JetPoly& a) {
  (void)n;
  std::set<std::tuple<int, int, FormMask>> components;
  for (const auto& [m, c] : a)
    for (const auto& v : m) components.insert({v.slot, v.dir, v.ghost});
  for (const auto& [slot, dir, ghost] : components)
    if (!jet_is_zero(euler_derivative(a, slot, dir, ghost))) return false;
  return true;
}

JetPoly jet_ce_differential(int n, int arity, const JetPoly& a) {
  // (dL)(xi_0..xi_q) = sum_{i<j} sign * L([xi_i, xi_j], others in order);
  // mirrors the Dolbeault evaluator's bracket expansion and Koszul signs.
  JetPoly out;
  int q1 = arity + 1;  // new arity
  for (int i = 0; i < q1; ++i) {
    for (int j = i + 1; j < q1; ++j) {
      // map of inner slots 1..arity-1 to the remaining new slots
      std::vector<int> remap;  // inner slot k >= 1 -> new slot remap[k-1]
      for (int l = 0; l < q1; ++l)
        if (l != i && l != j) remap.push_back(l);
      for (const auto& [m, c] : a) {
        // find the slot-0 variable (bracket slot)
        const JetVar* v0 = nullptr;
        JetMonomial rest;
        for (const auto& v : m) {
          if (v.slot == 0)
            v0 = &v;
          else
            rest.push_back(v);
        }
        if (!v0) continue;  // multilinear bodies always carry slot 0
        // rebuild the non-bracket variables on the new slot labels
        JetMonomial base;
        std::vector<int> ghost_by_slot(q1, -1);
        for (const auto& v : rest) {
          JetVar nv = v;
          nv.slot = remap[(std::size_t)(v.slot - 1)];
          ghost_by_slot[nv.slot] = mask_degree(nv.ghost);
          base.push_back(nv);
        }
        // expand the bracket jet: ghost split + Leibniz + direction sum
        FormMask g0 = v0->ghost;
        const MultiIndex& gamma = v0->alpha;
        for (FormMask gi = 0;; gi = (gi - g0) & g0) {
          // gi runs over submasks of g0
          FormMask gj = g0 & ~gi;
          int ws = wedge_sign(gi, gj);
          if (ws != 0) {
            ghost_by_slot[i] = mask_degree(gi);
            ghost_by_slot[j] = mask_degree(gj);
            // same sign rule as the Dolbeault evaluator's bracket term
            int par = 1 + ghost_by_slot[i];
            for (int l = 0; l < i; ++l) par += (ghost_by_slot[i] + 1) * (ghost_by_slot[l] + 1);
            for (int l = 0; l < j; ++l)
              if (l != i) par += (ghost_by_slot[j] + 1) * (ghost_by_slot[l] + 1);
            int bsign = par % 2 == 0 ? 1 : -1;
            for (int t = 0; t < n; ++t) {
              for (const auto& delta : mi_enumerate_upto(n, mi_order(gamma))) {
                MultiIndex rest_d;
                if (!mi_sub(gamma, delta, rest_d)) continue;
                Rational binom(1);
                for (int u = 0; u < n; ++u) binom *= Rational::binomial(gamma[u], delta[u]);
                Rational coef = c * Rational(ws * bsign) * binom;
                // term xi_i,t * d_t(xi_j,m0): u_{i,t,gi,delta} u_{j,m0,gj,rest+e_t}
                {
                  JetMonomial mm = base;
                  MultiIndex aj = rest_d;
                  aj[t] += 1;
                  mm.push_back(JetVar{i, t, gi, delta});
                  mm.push_back(JetVar{j, v0->dir, gj, aj});
                  std::sort(mm.begin(), mm.end(),
                            [](const JetVar& x, const JetVar& y) { return x.slot < y.slot; });
                  jet_add_term(out, mm, coef);
                }
                // minus xi_j,t * d_t(xi_i,m0)
                {
                  JetMonomial mm = base;
                  MultiIndex ai = rest_d;
                  ai[t] += 1;
                  mm.push_back(JetVar{j, t, gj, delta});
                  mm.push_back(JetVar{i, v0->dir, gi, ai});
                  std::sort(mm.begin(), mm.end(),
                            [](const JetVar& x, const JetVar& y) { return x.slot < y.slot; });
                  jet_add_term(out, mm, -coef);
                }
              }
            }
          }
          if (gi == g0) break;
        }
      }
    }
  }
  return out;
}

namespace {

struct SlotCandidate {
  int dir;
  FormMask ghost;
  MultiIndex alpha;
};

std::vector<SlotCandidate> candidates(int n, int jet_bound) {
  std::vector<SlotCandidate> out;
  for (int d = 0; d < n; ++d)
    for (FormMask g = 0; g < (1u << n); ++g)
      for (const auto& a : mi_enumerate_upto(n, jet_bound)) out.push_back({d, g, a});
  return out;
}

DolbeaultField probe_field(int n, const SlotCandidate& c, const MultiIndex& zbar) {
  return DolbeaultField{c.alpha, zbar, c.ghost, c.dir};
}

// Predicted evaluation of an extracted body on global monomial inputs.
Poly predict(int n, const JetPoly& body, const std::vector<DolbeaultField>& xs) {
  Poly acc;
  for (const auto& [m, c] : body) {
    Rational coef = c;
    MultiIndex expz = mi_zero(n), expzb = mi_zero(n);
    bool ok = true;
    if (m.size() != xs.size()) continue;
    for (const auto& v : m) {
      const DolbeaultField& x = xs[(std::size_t)v.slot];
      if (v.dir != x.dir || v.ghost != x.ghost) {
        ok = false;
        break;
      }
      Rational ff = mi_deriv_coeff(x.a, v.alpha);
      if (ff.is_zero()) {
        ok = false;
        break;
      }
      coef *= ff;
      MultiIndex rest;
      mi_sub(x.a, v.alpha, rest);
      expz = mi_add(expz, rest);
      expzb = mi_add(expzb, x.b);
    }
    if (!ok) continue;
    MultiIndex full(expz);
    full.insert(full.end(), expzb.begin(), expzb.end());
    poly_add_term(acc, full, coef);
  }
  return acc;
}

}  // namespace

LocalFunctionalIntegrand extract_density(const DolbeaultCochain& f, int jet_bound,
                                         int check_margin, int total_ghost) {
  int n = f.n();
  int arity = f.arity();
  LocalFunctionalIntegrand out;
  out.n = n;
  out.arity = arity;
  out.jet_bound = jet_bound;

  auto ghost_ok = [&](int acc, int slots_left) {
    if (total_ghost < 0) return true;
    return acc <= total_ghost && acc + slots_left * n >= total_ghost;
  };
  auto ghost_final = [&](int acc) { return total_ghost < 0 || acc == total_ghost; };

  std::vector<SlotCandidate> cands = candidates(n, jet_bound);
  std::vector<DolbeaultField> tuple((std::size_t)arity,
                                    DolbeaultField{mi_zero(n), mi_zero(n), 0, 0});
  std::vector<std::size_t> pick((std::size_t)arity, 0);
  // extraction: delta-jet probing at the origin
  auto rec = [&](auto&& self, std::size_t slot, int gacc) -> void {
    if (slot == (std::size_t)arity) {
      if (!ghost_final(gacc)) return;
      Poly v = f.evaluate(tuple);
      if (poly_is_zero(v)) return;
      auto it = v.find(mi_zero(2 * n));
      if (it == v.end()) return;
      Rational c = it->second;
      JetMonomial m;
      for (std::size_t s = 0; s < (std::size_t)arity; ++s) {
        const SlotCandidate& sc = cands[pick[s]];
        c /= mi_factorial(sc.alpha);
        m.push_back(JetVar{(int)s, sc.dir, sc.ghost, sc.alpha});
      }
      jet_add_term(out.body, m, c);
      return;
    }
    for (std::size_t i = 0; i < cands.size(); ++i) {
      int g = gacc + mask_degree(cands[i].ghost);
      if (!ghost_ok(g, arity - 1 - (int)slot)) continue;
      pick[slot] = i;
      tuple[slot] = probe_field(n, cands[i], mi_zero(n));
      self(self, slot + 1, g);
    }
  };
  rec(rec, 0, 0);

  // certification pass 1: the extracted constant-coefficient body must
  // reproduce the full base-point dependence of every probe evaluation
  auto verify_tuple = [&](const std::vector<DolbeaultField>& xs) {
    Poly actual = f.evaluate(xs);
    Poly pred = predict(n, out.body, xs);
    for (const auto& [mm, c] : pred) poly_add_term(actual, mm, -c);
    if (!poly_is_zero(actual))
      throw std::runtime_error("extract_density: body is not translation invariant "
                               "or exceeds the jet bound");
  };
  auto rec2 = [&](auto&& self, std::size_t slot, int gacc) -> void {
    if (slot == (std::size_t)arity) {
      if (ghost_final(gacc)) verify_tuple(tuple);
      return;
    }
    for (std::size_t i = 0; i < cands.size(); ++i) {
      int g = gacc + mask_degree(cands[i].ghost);
      if (!ghost_ok(g, arity - 1 - (int)slot)) continue;
      tuple[slot] = probe_field(n, cands[i], mi_zero(n));
      self(self, slot + 1, g);
    }
  };
  rec2(rec2, 0, 0);

  // certification pass 2: bump one slot at a time past the bound and into
  // zbar degrees; a multilinear term outside the bound would fire here
  std::vector<SlotCandidate> extended = candidates(n, jet_bound + check_margin);
  std::vector<MultiIndex> zbars = mi_enumerate_upto(n, 1);
  for (int bump = 0; bump < arity; ++bump) {
    auto rec3 = [&](auto&& self, std::size_t slot, int gacc) -> void {
      if (slot == (std::size_t)arity) {
        if (ghost_final(gacc)) verify_tuple(tuple);
        return;
      }
      if ((int)slot == bump) {
        for (const auto& sc : extended) {
          int g = gacc + mask_degree(sc.ghost);
          if (!ghost_ok(g, arity - 1 - (int)slot)) continue;
          for (const auto& zb : zbars) {
            // skip tuples already covered by the base passes
            if (mi_order(zb) == 0 && mi_order(sc.alpha) <= jet_bound) continue;
            tuple[slot] = probe_field(n, sc, zb);
            self(self, slot + 1, g);
          }
        }
      } else {
        for (std::size_t i = 0; i < cands.size(); ++i) {
          int g = gacc + mask_degree(cands[i].ghost);
          if (!ghost_ok(g, arity - 1 - (int)slot)) continue;
          tuple[slot] = probe_field(n, cands[i], mi_zero(n));
          self(self, slot + 1, g);
        }
      }
    };
    rec3(rec3, 0, 0);
  }
  out.verified = true;
  return out;
}

LocalFunctionalIntegrand delta_integrand(const DescentSolution& s, int jet_bound,
                                         int check_margin) {
  FormMask full = (FormMask)((1u << s.n) - 1);
  // the (n,n)-body fires only on tuples of total ghost degree n
  return extract_density(s.body(full, full), jet_bound, check_margin, s.n);
}

std::optional<Rational> divergence_equivalent(int n, const JetPoly& a, const JetPoly& b) {
  std::set<std::tuple<int, int, FormMask>> components;
  for (const auto& [m, c] : a)
    for (const auto& v : m) components.insert({v.slot, v.dir, v.ghost});
  for (const auto& [m, c] : b)
    for (const auto& v : m) components.insert({v.slot, v.dir, v.ghost});
  std::optional<Rational> lambda;
  std::vector<std::pair<JetPoly, JetPoly>> pairs;
  for (const auto& [slot, dir, ghost] : components) {
    JetPoly ea = euler_derivative(a, slot, dir, ghost);
    JetPoly eb = euler_derivative(b, slot, dir, ghost);
    if (jet_is_zero(eb)) {
      if (!jet_is_zero(ea)) return std::nullopt;
      continue;
    }
    // fit lambda off any nonzero coefficient of eb
    const auto& [m0, c0] = *eb.begin();
    auto it = ea.find(m0);
    Rational cand = (it == ea.end() ? Rational(0) : it->second) / c0;
    if (lambda && *lambda != cand) return std::nullopt;
    lambda = cand;
    pairs.emplace_back(std::move(ea), std::move(eb));
  }
  if (!lambda) return Rational(1);  // both are divergences
  for (const auto& [ea, eb] : pairs) {
    JetPoly diff = jet_add(ea, jet_scale(eb, -*lambda));
    if (!jet_is_zero(diff)) return std::nullopt;
  }
  return lambda;
}

}  // namespace gf
