#include "gf/cochain.hpp"

#include <algorithm>
#include <stdexcept>

namespace gf {

struct CochainNode {
  virtual ~CochainNode() = default;
  // xs is strictly increasing in the canonical order.
  virtual FormalForm eval(const std::vector<MonomialField>& xs) const = 0;
};

struct ModuleCochain::Cache {
  std::mutex mu;
  std::map<std::vector<MonomialField>, FormalForm> memo;
};

ModuleCochain ModuleCochain::make(int n, int arity, CoeffKind kind, int p,
                                  std::optional<int> weight, int jet_order,
                                  std::shared_ptr<const CochainNode> node) {
  ModuleCochain c;
  c.n_ = n;
  c.arity_ = arity;
  c.kind_ = kind;
  c.p_ = kind == CoeffKind::Trivial ? 0 : p;
  c.weight_ = weight;
  c.jet_order_ = jet_order;
  c.node_ = std::move(node);
  c.cache_ = std::make_shared<Cache>();
  return c;
}

FormalForm ModuleCochain::evaluate(const std::vector<MonomialField>& xs) const {
  if ((int)xs.size() != arity_) throw std::invalid_argument("ModuleCochain: wrong arity");
  // Alternating normalization: sort, track the permutation sign, kill
  // tuples with a repeated entry.
  std::vector<MonomialField> sorted = xs;
  int sign = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    for (std::size_t j = i; j > 0 && sorted[j] < sorted[j - 1]; --j) {
      std::swap(sorted[j], sorted[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) return FormalForm(n_, p_);

  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->memo.find(sorted);
    if (it != cache_->memo.end()) return it->second * Rational(sign);
  }
  FormalForm v = node_->eval(sorted);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->memo.emplace(sorted, v);
  }
  return v * Rational(sign);
}

FormalForm ModuleCochain::evaluate_fields(const std::vector<FormalVectorField>& xs) const {
  if ((int)xs.size() != arity_) throw std::invalid_argument("ModuleCochain: wrong arity");
  FormalForm acc(n_, p_);
  std::vector<MonomialField> pick(xs.size(), MonomialField{mi_zero(n_), 0});
  auto rec = [&](auto&& self, std::size_t slot, const Rational& coef) -> void {
    if (slot == xs.size()) {
      acc += evaluate(pick) * coef;
      return;
    }
    for (const auto& [m, c] : xs[slot].terms()) {
      pick[slot] = m;
      self(self, slot + 1, coef * c);
    }
  };
  rec(rec, 0, Rational(1));
  return acc;
}

Rational ModuleCochain::evaluate_scalar(const std::vector<MonomialField>& xs) const {
  return evaluate(xs).at_zero();
}

namespace {

struct ZeroNode final : CochainNode {
  int n, p;
  ZeroNode(int n_, int p_) : n(n_), p(p_) {}
  FormalForm eval(const std::vector<MonomialField>&) const override { return FormalForm(n, p); }
};

struct SparseNode final : CochainNode {
  int n, p;
  std::map<std::vector<MonomialField>, FormalForm> terms;
  FormalForm eval(const std::vector<MonomialField>& xs) const override {
    auto it = terms.find(xs);
    return it == terms.end() ? FormalForm(n, p) : it->second;
  }
};

struct LinCombNode final : CochainNode {
  int n, p;
  std::vector<std::pair<Rational, ModuleCochain>> parts;
  FormalForm eval(const std::vector<MonomialField>& xs) const override {
    FormalForm acc(n, p);
    for (const auto& [c, f] : parts) acc += f.evaluate(xs) * c;
    return acc;
  }
};

struct FunctionNode final : CochainNode {
  std::function<FormalForm(const std::vector<MonomialField>&)> fn;
  FormalForm eval(const std::vector<MonomialField>& xs) const override { return fn(xs); }
};

struct CEDiffNode final : CochainNode {
  ModuleCochain inner;
  int n, p;
  bool module_action;
  FormalForm eval(const std::vector<MonomialField>& xs) const override {
    // (d f)(X_1..X_{q+1}) =
    //   Sum_{i<j} (-1)^{i+j} f([X_i,X_j], .. X_i, X_j omitted ..)
    // + Sum_i (-1)^{i+1} L_{X_i} f(.. X_i omitted ..)     (non-trivial kinds)
    FormalForm acc(n, p);
    std::size_t m = xs.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        FormalVectorField br = bracket(xs[i], xs[j]);
        if (br.is_zero()) continue;
        int sgn = ((i + j) % 2 == 0) ? 1 : -1;  // 1-based (i+1)+(j+1)
        std::vector<FormalVectorField> args;
        args.reserve(m - 1);
        args.push_back(br);
        for (std::size_t k = 0; k < m; ++k)
          if (k != i && k != j) args.emplace_back(xs[k]);
        acc += inner.evaluate_fields(args) * Rational(sgn);
      }
    if (module_action) {
      std::vector<MonomialField> rest;
      rest.reserve(m - 1);
      for (std::size_t i = 0; i < m; ++i) {
        rest.clear();
        for (std::size_t k = 0; k < m; ++k)
          if (k != i) rest.push_back(xs[k]);
        int sgn = (i % 2 == 0) ? 1 : -1;  // (-1)^{i+1} 1-based
        acc += lie_derivative(xs[i], inner.evaluate(rest)) * Rational(sgn);
      }
    }
    return acc;
  }
};

struct DeRhamValuesNode final : CochainNode {
  ModuleCochain inner;
  FormalForm eval(const std::vector<MonomialField>& xs) const override {
    return de_rham(inner.evaluate(xs));
  }
};

struct RadialValuesNode final : CochainNode {
  ModuleCochain inner;
  FormalForm eval(const std::vector<MonomialField>& xs) const override {
    return radial_primitive(inner.evaluate(xs));
  }
};

struct IotaNode final : CochainNode {
  ModuleCochain inner;
  int n, p;
  FormalForm eval(const std::vector<MonomialField>& xs) const override {
    FormalForm acc(n, p);
    std::vector<MonomialField> rest;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      rest.clear();
      for (std::size_t t = 0; t < xs.size(); ++t)
        if (t != k) rest.push_back(xs[t]);
      int sgn = (k % 2 == 0) ? 1 : -1;  // (-1)^{k+1} 1-based
      acc += contract(xs[k], inner.evaluate(rest)) * Rational(sgn);
    }
    return acc;
  }
};

struct CupNode final : CochainNode {
  ModuleCochain a, b;
  int n, p;
  Rational prefactor;
  FormalForm eval(const std::vector<MonomialField>& xs) const override {
    FormalForm acc(n, p);
    std::size_t qa = (std::size_t)a.arity(), total = xs.size();
    std::vector<std::size_t> idx(qa);
    for (std::size_t i = 0; i < qa; ++i) idx[i] = i;
    std::vector<MonomialField> xa(qa, MonomialField{mi_zero(n), 0});
    std::vector<MonomialField> xb(total - qa, MonomialField{mi_zero(n), 0});
    while (true) {
      std::vector<bool> used(total, false);
      for (std::size_t i = 0; i < qa; ++i) {
        xa[i] = xs[idx[i]];
        used[idx[i]] = true;
      }
      std::size_t t = 0;
      int inversions = 0;
      for (std::size_t i = 0; i < total; ++i) {
        if (used[i]) continue;
        xb[t++] = xs[i];
        // inputs of a that come after this b input
        for (std::size_t k = 0; k < qa; ++k)
          if (idx[k] > i) ++inversions;
      }
      Rational sgn = (inversions % 2 == 0) ? Rational(1) : Rational(-1);
      acc += wedge(a.evaluate(xa), b.evaluate(xb)) * (sgn * prefactor);
      // next combination
      std::size_t k = qa;
      while (k > 0 && idx[k - 1] == total - qa + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t i = k; i < qa; ++i) idx[i] = idx[i - 1] + 1;
    }
    return acc;
  }
};

struct IncludeNode final : CochainNode {
  ModuleCochain inner;
  FormalForm eval(const std::vector<MonomialField>& xs) const override {
    return inner.evaluate(xs);  // constants are already degree-0 forms
  }
};

struct AtZeroNode final : CochainNode {
  ModuleCochain inner;
  int n;
  Rational scale;
  FormalForm eval(const std::vector<MonomialField>& xs) const override {
    return FormalForm::scalar(n, inner.evaluate(xs).at_zero() * scale);
  }
};

}  // namespace

ModuleCochain zero_cochain(int n, int arity, CoeffKind kind, int p) {
  int pp = kind == CoeffKind::Trivial ? 0 : p;
  return ModuleCochain::make(n, arity, kind, pp, 0, 0, std::make_shared<ZeroNode>(n, pp));
}

ModuleCochain dual_basis_cochain(int n, const std::vector<MonomialField>& tuple, CoeffKind kind,
                                 const FormalForm& value) {
  std::map<std::vector<MonomialField>, FormalForm> terms;
  terms.emplace(tuple, value);
  return sparse_cochain(n, (int)tuple.size(), kind, value.degree(), terms);
}

ModuleCochain sparse_cochain(int n, int arity, CoeffKind kind, int p,
                             const std::map<std::vector<MonomialField>, FormalForm>& terms) {
  auto node = std::make_shared<SparseNode>();
  node->n = n;
  node->p = kind == CoeffKind::Trivial ? 0 : p;
  std::optional<int> weight;
  bool first = true, homogeneous = true;
  int jet = 0;
  for (const auto& [tuple, value] : terms) {
    if ((int)tuple.size() != arity) throw std::invalid_argument("sparse_cochain: tuple arity");
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
      if (!(tuple[i] < tuple[i + 1]))
        throw std::invalid_argument("sparse_cochain: tuple not strictly increasing");
    int in_w = 0;
    for (const auto& m : tuple) {
      in_w += m.weight();
      jet = std::max(jet, m.jet_order());
    }
    for (const auto& [t, c] : value.terms()) {
      int w = mi_order(t.beta) + value.degree() - in_w;
      if (first) {
        weight = w;
        first = false;
      } else if (weight != w) {
        homogeneous = false;
      }
    }
    node->terms.emplace(tuple, value);
  }
  if (!homogeneous) weight.reset();
  if (first) weight = 0;
  return ModuleCochain::make(n, arity, kind, node->p, weight, jet, node);
}

ModuleCochain lin_comb(const std::vector<std::pair<Rational, ModuleCochain>>& parts) {
  if (parts.empty()) throw std::invalid_argument("lin_comb: empty");
  auto node = std::make_shared<LinCombNode>();
  const ModuleCochain& f0 = parts.front().second;
  node->n = f0.n();
  node->p = f0.form_degree();
  std::optional<int> weight = f0.weight();
  int jet = 0;
  for (const auto& [c, f] : parts) {
    if (f.n() != f0.n() || f.arity() != f0.arity() || f.kind() != f0.kind() ||
        f.form_degree() != f0.form_degree())
      throw std::invalid_argument("lin_comb: shape mismatch");
    if (f.weight() != weight) weight.reset();
    jet = std::max(jet, f.jet_order());
    node->parts.emplace_back(c, f);
  }
  return ModuleCochain::make(f0.n(), f0.arity(), f0.kind(), f0.form_degree(), weight, jet, node);
}

ModuleCochain scale(const Rational& c, const ModuleCochain& f) {
  return lin_comb({{c, f}});
}

ModuleCochain cochain_from_function(
    int n, int arity, CoeffKind kind, int p, std::optional<int> weight, int jet_order,
    std::function<FormalForm(const std::vector<MonomialField>&)> fn) {
  auto node = std::make_shared<FunctionNode>();
  node->fn = std::move(fn);
  return ModuleCochain::make(n, arity, kind, kind == CoeffKind::Trivial ? 0 : p, weight, jet_order,
                             node);
}

ModuleCochain ce_differential(const ModuleCochain& f) {
  auto node = std::make_shared<CEDiffNode>();
  node->inner = f;
  node->n = f.n();
  node->p = f.form_degree();
  node->module_action = f.kind() != CoeffKind::Trivial;
  return ModuleCochain::make(f.n(), f.arity() + 1, f.kind(), f.form_degree(), f.weight(),
                             f.jet_order() + 1, node);
}

ModuleCochain de_rham_on_values(const ModuleCochain& f) {
  if (f.kind() == CoeffKind::Trivial)
    throw std::invalid_argument("de_rham_on_values: trivial coefficients");
  auto node = std::make_shared<DeRhamValuesNode>();
  node->inner = f;
  return ModuleCochain::make(f.n(), f.arity(), f.kind(), f.form_degree() + 1, f.weight(),
                             f.jet_order(), node);
}

ModuleCochain iota_operator(const ModuleCochain& f) {
  if (f.kind() == CoeffKind::Trivial || f.form_degree() < 1)
    throw std::invalid_argument("iota_operator: needs Omega^p values with p >= 1");
  auto node = std::make_shared<IotaNode>();
  node->inner = f;
  node->n = f.n();
  node->p = f.form_degree() - 1;
  return ModuleCochain::make(f.n(), f.arity() + 1, f.kind(), f.form_degree() - 1, f.weight(),
                             f.jet_order(), node);
}

ModuleCochain cup_product(const ModuleCochain& a, const ModuleCochain& b) {
  if (a.n() != b.n()) throw std::invalid_argument("cup_product: dimension mismatch");
  auto node = std::make_shared<CupNode>();
  node->a = a;
  node->b = b;
  node->n = a.n();
  node->p = a.form_degree() + b.form_degree();
  // bicomplex Koszul sign: values of a move past the inputs of b
  node->prefactor = (a.form_degree() * b.arity()) % 2 == 0 ? Rational(1) : Rational(-1);
  CoeffKind kind = (a.kind() == CoeffKind::Trivial && b.kind() == CoeffKind::Trivial)
                       ? CoeffKind::Trivial
                       : CoeffKind::Forms;
  std::optional<int> weight;
  if (a.weight() && b.weight()) weight = *a.weight() + *b.weight();
  return ModuleCochain::make(a.n(), a.arity() + b.arity(), kind, node->p, weight,
                             std::max(a.jet_order(), b.jet_order()), node);
}

ModuleCochain include_trivial(const ModuleCochain& f) {
  if (f.kind() != CoeffKind::Trivial) throw std::invalid_argument("include_trivial: not trivial");
  auto node = std::make_shared<IncludeNode>();
  node->inner = f;
  return ModuleCochain::make(f.n(), f.arity(), CoeffKind::Forms, 0, f.weight(), f.jet_order(),
                             node);
}

ModuleCochain phi_component(const ModuleCochain& f) {
  if (f.kind() == CoeffKind::Trivial) {
    // Phi restricted to trivial cochains is the identity.
    return f;
  }
  int p = f.form_degree();
  int q = f.arity();
  ModuleCochain it = f;
  for (int k = 0; k < p; ++k) it = iota_operator(it);
  auto node = std::make_shared<AtZeroNode>();
  node->inner = it;
  node->n = f.n();
  // The bidegree sign makes Phi simultaneously multiplicative and a chain
  // map against the engine's differential conventions.
  int sgn = (q * p + p * (p + 1) / 2) % 2 == 0 ? 1 : -1;
  node->scale = Rational(sgn) / Rational::factorial((unsigned)p);
  return ModuleCochain::make(f.n(), f.arity() + p, CoeffKind::Trivial, 0, f.weight(),
                             std::max(f.jet_order(), 0), node);
}

ModuleCochain psi_component(const ModuleCochain& f) {
  if (f.kind() == CoeffKind::Trivial || f.form_degree() == 0)
    return zero_cochain(f.n(), f.arity(), f.kind() == CoeffKind::Trivial ? CoeffKind::Trivial
                                                                         : CoeffKind::Forms,
                        0);
  auto node = std::make_shared<RadialValuesNode>();
  node->inner = f;
  return ModuleCochain::make(f.n(), f.arity(), CoeffKind::Forms, f.form_degree() - 1, f.weight(),
                             f.jet_order(), node);
}

}  // namespace gf
