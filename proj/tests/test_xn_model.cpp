#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gf/slice.hpp"
#include "gf/xn_model.hpp"

using namespace gf;

namespace {

XnMonomial xm(std::uint32_t xi, std::initializer_list<int> ell) {
  return XnMonomial{xi, MultiIndex(ell)};
}

}  // namespace

TEST_CASE("model differential examples") {
  // d(xi1) = c1
  CdgaElement e{{xm(1u, {0}), Rational(1)}};
  CdgaElement de = model_differential(1, e);
  REQUIRE(de.size() == 1);
  CHECK(de.begin()->first == xm(0u, {1}));
  CHECK(de.begin()->second == Rational(1));

  // d(xi1 c1) = c1^2 = 0 at n = 1 (relation)
  CdgaElement e2{{xm(1u, {1}), Rational(1)}};
  CHECK(model_differential(1, e2).empty());

  // d(xi1 xi2) = c1 xi2 - xi1 c2 at n = 2
  CdgaElement e3{{xm(3u, {0, 0}), Rational(1)}};
  CdgaElement de3 = model_differential(2, e3);
  REQUIRE(de3.size() == 2);
  CHECK(de3.at(xm(2u, {1, 0})) == Rational(1));
  CHECK(de3.at(xm(1u, {0, 1})) == Rational(-1));
}

TEST_CASE("d squared vanishes on the full monomial basis") {
  for (int n = 1; n <= 3; ++n)
    for (int deg = 0; deg <= 2 * n * n + 2; ++deg)
      for (const auto& m : model_basis(n, deg)) {
        CdgaElement e{{m, Rational(1)}};
        CHECK(model_differential(n, model_differential(n, e)).empty());
      }
}

TEST_CASE("basis count sanity") {
  // 2^n * #{ell : sum i ell_i <= n}
  CHECK(model_monomial_count(1) == 4);     // {1, c1} x {1, xi1}
  CHECK(model_monomial_count(2) == 16);    // ells: 00,10,20,01 -> 4 * 4
  std::size_t total = 0;
  for (int deg = 0; deg <= 40; ++deg) total += model_basis(2, deg).size();
  CHECK(total == model_monomial_count(2));
}

TEST_CASE("model betti at n = 1 is 1,0,0,1") {
  BettiTable t = model_betti(1, 3);
  CHECK(t.dims.at(0) == 1);
  CHECK(t.dims.at(1) == 0);
  CHECK(t.dims.at(2) == 0);
  CHECK(t.dims.at(3) == 1);
}

TEST_CASE("model betti at n = 2") {
  BettiTable t = model_betti(2, 8);
  CHECK(t.dims.at(0) == 1);
  CHECK(t.dims.at(5) == 2);
  for (int q : {1, 2, 3, 4, 6}) CHECK(t.dims.at(q) == 0);
}

TEST_CASE("oracle equivalence with the CE engine") {
  // n = 1 through degree 4, H^0 conventions aligned
  BettiTable model = model_betti(1, 4);
  BettiTable ce = betti(1, 4);
  CHECK(model.dims.at(0) == 1);  // ce engine reports H^0 = 1 separately
  for (int q = 1; q <= 4; ++q) CHECK(model.dims.at(q) == ce.dims.at(q));

  // n = 2 at degree 5
  CHECK(model_betti(2, 5).dims.at(5) == betti(2, 5).dims.at(5));
}
