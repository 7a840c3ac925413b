#include "gf/generators.hpp"

#include "gf/jacobian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gf {

namespace {

template <typename F>
void for_each_permutation(int k, F&& visit) {
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  int sign = 1;
  // plain changes would be neater; next_permutation with parity recompute
  // is fine at k <= 5
  do {
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inv;
    sign = (inv % 2 == 0) ? 1 : -1;
    visit(perm, sign);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

GeneratorClass a_class(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("a_class: index out of range");
  int arity = 2 * i - 1;
  auto fn = [n, arity](const std::vector<MonomialField>& xs) -> FormalForm {
    std::vector<PolyMatrix> jac;
    jac.reserve(xs.size());
    for (const auto& m : xs) jac.push_back(jacobian_matrix(FormalVectorField(m)));
    Poly acc;
    for_each_permutation(arity, [&](const std::vector<int>& perm, int sign) {
      PolyMatrix prod = jac[perm[0]];
      for (int k = 1; k < arity; ++k) prod = poly_mat_mul(prod, jac[perm[k]]);
      acc = poly_add(acc, poly_scale(poly_mat_trace(prod), Rational(sign)));
    });
    return FormalForm::from_poly(n, acc);
  };
  GeneratorClass g{GeneratorKind::A, i, n,
                   cochain_from_function(n, arity, CoeffKind::Forms, 0, 0, 1, fn)};
  return g;
}

GeneratorClass tau_class(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("tau_class: index out of range");
  auto fn = [n, i](const std::vector<MonomialField>& xs) -> FormalForm {
    std::vector<FormMatrix> dj;
    dj.reserve(xs.size());
    for (const auto& m : xs) dj.push_back(d_jacobian(FormalVectorField(m)));
    FormalForm acc(n, i);
    for_each_permutation(i, [&](const std::vector<int>& perm, int sign) {
      FormMatrix prod = dj[perm[0]];
      for (int k = 1; k < i; ++k) prod = form_mat_mul(prod, dj[perm[k]]);
      acc += form_mat_trace(prod) * Rational(sign);
    });
    return acc;
  };
  GeneratorClass g{GeneratorKind::Tau, i, n,
                   cochain_from_function(n, i, CoeffKind::Forms, i, 0, 2, fn)};
  return g;
}

int ClassMonomial::arity(int) const {
  int q = 0;
  for (int i : a_indices) q += 2 * i - 1;
  for (auto [i, e] : tau_pow) q += i * e;
  return q;
}

int ClassMonomial::form_degree(int) const {
  int p = 0;
  for (auto [i, e] : tau_pow) p += i * e;
  return p;
}

std::string ClassMonomial::str() const {
  std::ostringstream os;
  bool any = false;
  for (int i : a_indices) {
    os << (any ? "*" : "") << "a" << i;
    any = true;
  }
  for (auto [i, e] : tau_pow) {
    os << (any ? "*" : "") << "t" << i;
    if (e > 1) os << "^" << e;
    any = true;
  }
  return any ? os.str() : "1";
}

TotalCochain realize(int n, const ClassMonomial& m) {
  int q = m.arity(n), p = m.form_degree(n);
  if (p > n) {
    // Omega^{>n} = 0: the relation monomials vanish on the nose.
    TotalCochain z(n, q + p);
    z.add_component(zero_cochain(n, q, CoeffKind::Forms, p));
    return z;
  }
  std::optional<TotalCochain> acc;
  auto mul_in = [&](const ModuleCochain& f) {
    TotalCochain t = TotalCochain::from_component(f);
    acc = acc ? total_cup(*acc, t) : t;
  };
  for (int i : m.a_indices) mul_in(a_class(n, i).realized);
  for (auto [i, e] : m.tau_pow)
    for (int k = 0; k < e; ++k) mul_in(tau_class(n, i).realized);
  if (!acc) throw std::invalid_argument("realize: empty monomial");
  return *acc;
}

std::optional<Rational> proportionality(const ModuleCochain& f, const ModuleCochain& g,
                                        const std::vector<CovectorTuple>& basis) {
  std::optional<Rational> lambda;
  for (const auto& tup : basis) {
    Rational fv = f.evaluate_scalar(tup);
    Rational gv = g.evaluate_scalar(tup);
    if (fv.is_zero() != gv.is_zero()) return std::nullopt;
    if (fv.is_zero()) continue;
    Rational r = gv / fv;
    if (lambda && *lambda != r) return std::nullopt;
    lambda = r;
  }
  return lambda;
}

ModuleCochain wronskian_cocycle() {
  // det of (f g h / f' g' h' / f'' g'' h'') at 0; the displayed generator
  // of H^3(vect(1)).
  auto fn = [](const std::vector<MonomialField>& xs) -> FormalForm {
    std::vector<Poly> f(3);
    for (int k = 0; k < 3; ++k) f[k] = Poly{{xs[k].alpha, Rational(1)}};
    Rational det(0);
    // 3x3 determinant with rows f, f', f'' evaluated at 0
    std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
    for (int c = 0; c < 3; ++c) {
      Poly cur = f[c];
      for (int r = 0; r < 3; ++r) {
        m[r][c] = poly_constant_term(cur);
        cur = poly_derivative(cur, 0);
      }
    }
    det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
          m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return FormalForm::scalar(1, det);
  };
  return cochain_from_function(1, 3, CoeffKind::Trivial, 0, 0, 2, fn);
}

Rational wronskian_scalar() {
  ClassMonomial m;
  m.a_indices = {1};
  m.tau_pow = {{1, 1}};
  ModuleCochain mine = phi_map(realize(1, m));
  ComplexSlice s3 = build_weight_zero_slice(1, 3);
  auto lambda = proportionality(wronskian_cocycle(), mine, s3.basis);
  if (!lambda) throw std::runtime_error("wronskian_scalar: not proportional");
  return *lambda;
}

std::vector<TotalBasisElement> weight_zero_total_basis(int n, int degree, int beta_cap) {
  std::vector<TotalBasisElement> out;
  for (int p = 0; p <= std::min(degree, n); ++p) {
    int q = degree - p;
    if (q < 1) continue;
    // weight zero: |beta| + p = sum of covector field weights =: W
    for (int beta_order = 0; beta_order <= beta_cap; ++beta_order) {
      int w = beta_order + p;
      // strictly increasing q-tuples with field weights summing to w
      std::vector<MonomialField> universe = enumerate_fields(n, w + q);
      std::vector<MonomialField> cur;
      auto rec = [&](auto&& self, std::size_t start, int remaining_slots,
                     int remaining_weight) -> void {
        if (remaining_slots == 0) {
          if (remaining_weight != 0) return;
          for (const auto& beta : mi_enumerate_exact(n, beta_order)) {
            for (FormMask mask = 0; mask < (1u << n); ++mask) {
              if (mask_degree(mask) != p) continue;
              FormalForm v(n, p);
              v.add({beta, mask}, Rational(1));
              std::map<std::vector<MonomialField>, FormalForm> terms;
              terms.emplace(cur, v);
              out.push_back({q, p, sparse_cochain(n, q, CoeffKind::Forms, p, terms)});
            }
          }
          return;
        }
        for (std::size_t i = start; i < universe.size(); ++i) {
          int fw = universe[i].weight();
          if (fw * remaining_slots > remaining_weight) break;
          cur.push_back(universe[i]);
          self(self, i + 1, remaining_slots - 1, remaining_weight - fw);
          cur.pop_back();
        }
      };
      rec(rec, 0, q, w);
    }
  }
  return out;
}

IdentityReport chain_map_identity(int n, int degree_cap, int beta_cap) {
  IdentityReport rep;
  std::map<int, ComplexSlice> slices;
  for (int deg = 1; deg <= degree_cap; ++deg) {
    ComplexSlice target = build_weight_zero_slice(n, deg + 1);
    for (const auto& elem : weight_zero_total_basis(n, deg, beta_cap)) {
      TotalCochain t = TotalCochain::from_component(elem.cochain);
      ModuleCochain lhs = phi_map(total_differential(t));
      ModuleCochain rhs = ce_differential(phi_map(t));
      RationalVector l = coordinates(lhs, target.basis);
      RationalVector r = coordinates(rhs, target.basis);
      ++rep.elements_checked;
      if (l != r) {
        rep.ok = false;
        rep.failure = "degree " + std::to_string(deg) + " (q=" + std::to_string(elem.q) +
                      ", p=" + std::to_string(elem.p) + ")";
        return rep;
      }
    }
  }
  return rep;
}

IdentityReport homotopy_identity(int n, int degree_cap, int beta_cap, const CheckConfig& cfg) {
  IdentityReport rep;
  for (int deg = 1; deg <= degree_cap; ++deg) {
    for (const auto& elem : weight_zero_total_basis(n, deg, beta_cap)) {
      TotalCochain res = homotopy_residual(TotalCochain::from_component(elem.cochain));
      ++rep.elements_checked;
      auto cert = vanishes(res, cfg);
      if (!cert.closed) {
        rep.ok = false;
        rep.failure = "degree " + std::to_string(deg) + " (q=" + std::to_string(elem.q) +
                      ", p=" + std::to_string(elem.p) + ")";
        return rep;
      }
    }
  }
  return rep;
}

namespace {

ClassReport report_for(int n, const ClassMonomial& mono, const ComplexSlice& witness_slice,
                       const CheckConfig& cfg) {
  ClassReport r;
  r.monomial = mono.str();
  r.q = mono.arity(n);
  r.p = mono.form_degree(n);
  TotalCochain t = realize(n, mono);
  r.identically_zero = r.p > n;
  r.cocycle = is_cocycle(t, /*total=*/true, cfg);
  ModuleCochain ph = phi_map(t);
  auto w = coboundary_witness(ph, witness_slice);
  r.exact = w.has_value();
  r.witness = w;
  if (r.identically_zero) r.note = "form degree exceeds n: zero representative, zero witness";
  return r;
}

}  // namespace

RingReport verify_ring_presentation(int n, std::size_t max_slice_dim, const CheckConfig& cfg) {
  if (n < 1 || n > 2) throw ResourceCapError("verify_ring_presentation: n capped at 2");
  RingReport out;
  out.n = n;
  if (n == 1) {
    // generators: a1 (0,1), t1 (1,1); relation t1^2 = 0; survivor a1*t1.
    std::vector<ClassMonomial> monos;
    ClassMonomial a1;
    a1.a_indices = {1};
    ClassMonomial t1;
    t1.tau_pow = {{1, 1}};
    ClassMonomial t1sq;
    t1sq.tau_pow = {{1, 2}};
    ClassMonomial a1t1;
    a1t1.a_indices = {1};
    a1t1.tau_pow = {{1, 1}};
    for (const auto& mono : {t1, t1sq, a1t1}) {
      int deg = mono.arity(n) + mono.form_degree(n);
      ComplexSlice s = build_weight_zero_slice(n, deg - 1, max_slice_dim);
      out.classes.push_back(report_for(n, mono, s, cfg));
    }
    out.notes = "survivor a1*t1 must be non-exact; t1 is exact in the total complex";
  } else {
    ClassMonomial t1cubed;
    t1cubed.tau_pow = {{1, 3}};
    ClassMonomial t1t2;
    t1t2.tau_pow = {{1, 1}, {2, 1}};
    ClassMonomial t2sq;
    t2sq.tau_pow = {{2, 2}};
    ClassMonomial a1t1sq;
    a1t1sq.a_indices = {1};
    a1t1sq.tau_pow = {{1, 2}};
    ClassMonomial a1t2;
    a1t2.a_indices = {1};
    a1t2.tau_pow = {{2, 1}};
    for (const auto& mono : {t1cubed, t1t2, t2sq, a1t1sq, a1t2}) {
      int deg = mono.arity(n) + mono.form_degree(n);
      ComplexSlice s = build_weight_zero_slice(n, deg - 1, max_slice_dim);
      out.classes.push_back(report_for(n, mono, s, cfg));
    }
    // independence of the two survivors in H^5: the span of their
    // coordinate vectors stays 2-dimensional modulo im(d_4).
    ComplexSlice s4 = build_weight_zero_slice(n, 4, max_slice_dim);
    RationalVector v1 = coordinates(phi_map(realize(n, a1t1sq)), s4.target_basis);
    RationalVector v2 = coordinates(phi_map(realize(n, a1t2)), s4.target_basis);
    SparseMatrix ext(s4.target_basis.size(), s4.basis.size() + 2);
    for (std::size_t r = 0; r < s4.target_basis.size(); ++r)
      for (const auto& [c, v] : s4.d.row(r)) ext.add(r, c, v);
    for (std::size_t r = 0; r < s4.target_basis.size(); ++r) {
      ext.add(r, s4.basis.size(), v1[r]);
      ext.add(r, s4.basis.size() + 1, v2[r]);
    }
    out.h5_independent = rank(ext) == rank(s4.d) + 2;
    out.notes = "relations t1^3, t1*t2, t2^2 vanish on the nose (Omega^{>2} = 0)";
  }
  return out;
}

}  // namespace gf
