#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gf/cocycle_check.hpp"

using namespace gf;

namespace {

MonomialField mono(std::initializer_list<int> alpha, int dir) {
  return MonomialField{MultiIndex(alpha), dir};
}

MonomialField random_mono(std::mt19937_64& rng, int n, int max_order) {
  std::uniform_int_distribution<int> ord(0, max_order);
  std::uniform_int_distribution<int> dir(0, n - 1);
  MultiIndex a(n, 0);
  int total = ord(rng);
  for (int k = 0; k < total; ++k) a[(std::size_t)dir(rng)] += 1;
  return {a, dir(rng)};
}

FormalForm random_value(std::mt19937_64& rng, int n, int p) {
  FormalForm f(n, p);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> ordd(0, 2);
  std::uniform_int_distribution<int> var(0, n - 1);
  for (int t = 0; t < 2; ++t) {
    MultiIndex b(n, 0);
    int total = ordd(rng);
    for (int k = 0; k < total; ++k) b[(std::size_t)var(rng)] += 1;
    FormMask mask = 0;
    while (mask_degree(mask) < p) mask |= 1u << var(rng);
    int c = coef(rng);
    if (c != 0) f.add({b, mask}, Rational(c));
  }
  return f;
}

ModuleCochain random_cochain(std::mt19937_64& rng, int n, int arity, CoeffKind kind, int p) {
  std::map<std::vector<MonomialField>, FormalForm> terms;
  for (int t = 0; t < 3; ++t) {
    std::map<MonomialField, int> pick;
    while ((int)pick.size() < arity) pick.emplace(random_mono(rng, n, 2), 0);
    std::vector<MonomialField> tuple;
    for (const auto& [m, u] : pick) tuple.push_back(m);
    FormalForm v = kind == CoeffKind::Trivial ? FormalForm::scalar(n, Rational(1 + (t % 2)))
                                              : random_value(rng, n, p);
    if (!v.is_zero()) terms.insert_or_assign(tuple, v);
  }
  return sparse_cochain(n, arity, kind, p, terms);
}

bool same_on_universe(const ModuleCochain& a, const ModuleCochain& b, int bound) {
  ModuleCochain diff = lin_comb({{Rational(1), a}, {Rational(-1), b}});
  return !find_nonzero_tuple(diff, bound).has_value();
}

}  // namespace

TEST_CASE("evaluation is alternating and multilinear") {
  ModuleCochain phi = dual_basis_cochain(1, {mono({1}, 0)}, CoeffKind::Trivial,
                                         FormalForm::scalar(1, Rational(1)));
  CHECK(phi.evaluate_scalar({mono({1}, 0)}) == Rational(1));
  CHECK(phi.evaluate_scalar({mono({2}, 0)}) == Rational(0));

  ModuleCochain psi = dual_basis_cochain(
      1, {mono({0}, 0), mono({1}, 0)}, CoeffKind::Trivial, FormalForm::scalar(1, Rational(1)));
  CHECK(psi.evaluate_scalar({mono({0}, 0), mono({1}, 0)}) == Rational(1));
  CHECK(psi.evaluate_scalar({mono({1}, 0), mono({0}, 0)}) == Rational(-1));
  CHECK(psi.evaluate_scalar({mono({1}, 0), mono({1}, 0)}) == Rational(0));

  FormalVectorField sum(1);
  sum.add(mono({0}, 0), Rational(2));
  sum.add(mono({2}, 0), Rational(5));
  CHECK(psi.evaluate_fields({sum, FormalVectorField(mono({1}, 0))}).at_zero() == Rational(2));
}

TEST_CASE("ce differential on the dual of d_x") {
  // (d phi)(X, Y) = -phi([X, Y]); on (x d_x, d_x): [x d_x, d_x] = -d_x
  ModuleCochain phi = dual_basis_cochain(1, {mono({0}, 0)}, CoeffKind::Trivial,
                                         FormalForm::scalar(1, Rational(1)));
  ModuleCochain dphi = ce_differential(phi);
  CHECK(dphi.evaluate_scalar({mono({1}, 0), mono({0}, 0)}) == Rational(1));
  CHECK(dphi.evaluate_scalar({mono({0}, 0), mono({1}, 0)}) == Rational(-1));
}

TEST_CASE("ce differential of an O-valued 0-cochain is the Lie derivative term") {
  // f = x as a constant cochain in O; (df)(X) = L_X f up to the engine's
  // fixed sign (+1 on X = d_x here, forced by d.d = 0 against the bracket
  // term's sign).
  std::map<std::vector<MonomialField>, FormalForm> terms;
  FormalForm x1(1, 0);
  x1.add({{1}, 0}, Rational(1));
  terms.emplace(std::vector<MonomialField>{}, x1);
  ModuleCochain f = sparse_cochain(1, 0, CoeffKind::Forms, 0, terms);
  ModuleCochain df = ce_differential(f);
  CHECK(df.evaluate({mono({0}, 0)}).at_zero() == Rational(1));
}

TEST_CASE("d after d vanishes on random cochains") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 12; ++t) {
    int n = 1 + (t % 2);
    CoeffKind kind = (t % 3 == 0) ? CoeffKind::Trivial : CoeffKind::Forms;
    int p = kind == CoeffKind::Trivial ? 0 : (t % (n + 1));
    ModuleCochain f = random_cochain(rng, n, 2, kind, p);
    ModuleCochain ddf = ce_differential(ce_differential(f));
    CHECK(!find_nonzero_tuple(ddf, 3).has_value());
  }
}

TEST_CASE("total differential squares to zero") {
  std::mt19937_64 rng(202);
  for (int t = 0; t < 8; ++t) {
    int n = 1 + (t % 2);
    int p = t % (n + 1);
    ModuleCochain f = random_cochain(rng, n, 2, CoeffKind::Forms, p);
    TotalCochain tf = TotalCochain::from_component(f);
    TotalCochain dd = total_differential(total_differential(tf));
    CHECK(vanishes(dd, {.margin = 0, .stabilize = false}).closed);
  }
}

TEST_CASE("cup product at lowest arity") {
  std::mt19937_64 rng(303);
  ModuleCochain a = random_cochain(rng, 1, 1, CoeffKind::Trivial, 0);
  ModuleCochain b = random_cochain(rng, 1, 1, CoeffKind::Trivial, 0);
  ModuleCochain ab = cup_product(a, b);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      if (i == j) continue;
      MonomialField x = mono({i}, 0), y = mono({j}, 0);
      Rational expect = a.evaluate_scalar({x}) * b.evaluate_scalar({y}) -
                        a.evaluate_scalar({y}) * b.evaluate_scalar({x});
      CHECK(ab.evaluate_scalar({x, y}) == expect);
    }
}

TEST_CASE("total differential is a derivation for the cup product") {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 10; ++t) {
    int n = 1 + (t % 2);
    int pa = t % (n + 1), pb = (t + 1) % (n + 1);
    ModuleCochain a = random_cochain(rng, n, 1, CoeffKind::Forms, pa);
    ModuleCochain b = random_cochain(rng, n, 1, CoeffKind::Forms, pb);
    TotalCochain ta = TotalCochain::from_component(a);
    TotalCochain tb = TotalCochain::from_component(b);
    TotalCochain lhs = total_differential(total_cup(ta, tb));
    int dega = 1 + pa;
    TotalCochain rhs = total_cup(total_differential(ta), tb);
    rhs = total_sum(rhs, total_scale(Rational(dega % 2 == 0 ? 1 : -1),
                                     total_cup(ta, total_differential(tb))));
    TotalCochain diff = total_sum(lhs, total_scale(Rational(-1), rhs));
    CHECK(vanishes(diff, {.margin = 0, .stabilize = false}).closed);
  }
}

TEST_CASE("iota operator rejects function-valued cochains") {
  std::mt19937_64 rng(9);
  ModuleCochain f = random_cochain(rng, 1, 1, CoeffKind::Forms, 0);
  CHECK_THROWS_AS(iota_operator(f), std::invalid_argument);
}

TEST_CASE("weight and jet tracking") {
  ModuleCochain f = dual_basis_cochain(1, {mono({0}, 0), mono({2}, 0)}, CoeffKind::Trivial,
                                       FormalForm::scalar(1, Rational(1)));
  REQUIRE(f.weight().has_value());
  CHECK(*f.weight() == 0);
  CHECK(f.jet_order() == 2);
  ModuleCochain df = ce_differential(f);
  CHECK(*df.weight() == 0);
  CHECK(df.jet_order() == 3);

  FormalForm v(1, 1);
  v.add({{2}, 1u}, Rational(1));
  ModuleCochain g = dual_basis_cochain(1, {mono({1}, 0)}, CoeffKind::Forms, v);
  CHECK(*g.weight() == 3);
}

TEST_CASE("phi restricted to trivial cochains is the identity") {
  std::mt19937_64 rng(77);
  ModuleCochain f = random_cochain(rng, 1, 2, CoeffKind::Trivial, 0);
  ModuleCochain back = phi_map(include_total(f));
  CHECK(same_on_universe(f, back, 3));
}

TEST_CASE("is_cocycle flags a non-closed cochain with a witness tuple") {
  ModuleCochain f = dual_basis_cochain(1, {mono({2}, 0)}, CoeffKind::Trivial,
                                       FormalForm::scalar(1, Rational(1)));
  auto cert = is_cocycle(f, true, {.margin = 1, .stabilize = true});
  CHECK(!cert.closed);
  CHECK(cert.witness.has_value());

  std::mt19937_64 rng(55);
  ModuleCochain psi = random_cochain(rng, 1, 1, CoeffKind::Trivial, 0);
  auto cert2 = is_cocycle(ce_differential(psi), false, {.margin = 1, .stabilize = true});
  CHECK(cert2.closed);
  CHECK(cert2.stabilized);
}
