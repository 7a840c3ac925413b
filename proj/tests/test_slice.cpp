#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gf/slice.hpp"

using namespace gf;

namespace {

MonomialField mono(std::initializer_list<int> alpha, int dir) {
  return MonomialField{MultiIndex(alpha), dir};
}

SparseMatrix mat_mul(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix c(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [k, va] : a.row(r))
      for (const auto& [j, vb] : b.row(k)) c.add(r, j, va * vb);
  return c;
}

}  // namespace

TEST_CASE("weight zero slice bases at n = 1") {
  ComplexSlice s1 = build_weight_zero_slice(1, 1);
  REQUIRE(s1.dim() == 1);
  CHECK(s1.basis[0] == CovectorTuple{mono({1}, 0)});

  // reduced complex: no degree-0 basis
  CHECK(build_weight_zero_slice(1, 0).dim() == 0);

  ComplexSlice s2 = build_weight_zero_slice(1, 2);
  REQUIRE(s2.dim() == 1);
  CHECK(s2.basis[0] == CovectorTuple{mono({0}, 0), mono({2}, 0)});

  ComplexSlice s3 = build_weight_zero_slice(1, 3);
  REQUIRE(s3.dim() == 1);
  CHECK(s3.basis[0] == CovectorTuple{mono({0}, 0), mono({1}, 0), mono({2}, 0)});

  CHECK(build_weight_zero_slice(1, 4).dim() == 0);
}

TEST_CASE("slice differentials compose to zero") {
  for (int n = 1; n <= 2; ++n)
    for (int q = 1; q <= (n == 1 ? 4 : 5); ++q) {
      ComplexSlice a = build_weight_zero_slice(n, q);
      ComplexSlice b = build_weight_zero_slice(n, q + 1);
      REQUIRE(a.target_basis == b.basis);
      SparseMatrix dd = mat_mul(b.d, a.d);
      CHECK(dd.nonzeros() == 0);
    }
}

TEST_CASE("jet order bound on weight zero covectors") {
  for (int q = 1; q <= 5; ++q) {
    ComplexSlice s = build_weight_zero_slice(2, q);
    for (const auto& tup : s.basis)
      for (const auto& m : tup) CHECK(m.jet_order() <= q);
  }
}

TEST_CASE("reduced betti of vect(1) is 0,0,1,0") {
  BettiTable t = betti(1, 4);
  CHECK(t.dims.at(1) == 0);
  CHECK(t.dims.at(2) == 0);
  CHECK(t.dims.at(3) == 1);
  CHECK(t.dims.at(4) == 0);
}

TEST_CASE("resource cap raises") {
  CHECK_THROWS_AS(betti(2, 5, 3), ResourceCapError);
}

TEST_CASE("betti is invariant under basis permutation") {
  std::mt19937_64 rng(2024);
  for (int q = 1; q <= 4; ++q) {
    ComplexSlice s = build_weight_zero_slice(2, q);
    std::vector<std::size_t> rp(s.d.rows()), cp(s.d.cols());
    for (std::size_t i = 0; i < rp.size(); ++i) rp[i] = i;
    for (std::size_t i = 0; i < cp.size(); ++i) cp[i] = i;
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    CHECK(rank(s.d.permuted(rp, cp)) == rank(s.d));
  }
}

TEST_CASE("euler contraction is a contracting homotopy off weight zero") {
  for (int n = 1; n <= 2; ++n)
    for (int w : {-2, -1, 1, 2})
      for (int q = 1; q <= 3; ++q) {
        ComplexSlice sq = build_slice(n, q, w);
        if (sq.dim() == 0) continue;
        ComplexSlice sq1 = build_slice(n, q + 1, w);
        ComplexSlice sq0 = build_slice(n, q - 1, w);
        SparseMatrix h_q = euler_contraction_matrix(sq, sq0);    // q -> q-1
        SparseMatrix h_q1 = euler_contraction_matrix(sq1, sq);    // q+1 -> q
        // d_{q-1} h_q + h_{q+1} d_q = w id
        SparseMatrix lhs = mat_mul(sq0.d, h_q);
        SparseMatrix lhs2 = mat_mul(h_q1, sq.d);
        SparseMatrix expect(sq.dim(), sq.dim());
        for (std::size_t i = 0; i < sq.dim(); ++i) expect.add(i, i, Rational(w));
        for (std::size_t r = 0; r < sq.dim(); ++r)
          for (const auto& [c, v] : lhs2.row(r)) expect.add(r, c, -v);
        CHECK(lhs == expect);
      }
}

TEST_CASE("coordinates round trip through from_coordinates") {
  ComplexSlice s = build_weight_zero_slice(2, 2);
  RationalVector x(s.dim(), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = Rational((long)i - 3, 2);
  ModuleCochain f = from_coordinates(2, s.basis, x);
  CHECK(coordinates(f, s.basis) == x);
}
