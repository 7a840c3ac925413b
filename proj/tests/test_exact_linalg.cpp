#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gf/exact_linalg.hpp"

using namespace gf;

namespace {

SparseMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  SparseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.add(r, c, Rational(rows[r][c]));
  return m;
}

bool is_zero_vec(const RationalVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  SparseMatrix m(rows, cols);
  std::uniform_int_distribution<int> val(-4, 4);
  std::uniform_int_distribution<int> fill(0, 3);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (fill(rng) == 0) m.add(r, c, Rational(val(rng)));
  return m;
}

}  // namespace

TEST_CASE("rational invariants") {
  Rational q(2, 4);
  CHECK(q.num() == 1);
  CHECK(q.den() == 2);
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(0).den() == 1);
  CHECK(Rational::from_string("-7/21") == Rational(-1, 3));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK_THROWS(Rational(1, 1) / Rational(0));
}

TEST_CASE("rank examples") {
  CHECK(rank(SparseMatrix::identity(3)) == 3);
  CHECK(rank(SparseMatrix(4, 7)) == 0);
  CHECK(rank(from_rows({{1, 2}, {2, 4}}, 2)) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(SparseMatrix::identity(2)).empty());
  auto z = kernel_basis(SparseMatrix(2, 2));
  CHECK(z.size() == 2);
  auto k = kernel_basis(from_rows({{1, 1}}, 2));
  REQUIRE(k.size() == 1);
  // proportional to (1, -1)
  CHECK(k[0][0] == -k[0][1]);
  CHECK(!k[0][0].is_zero());
}

TEST_CASE("solve examples") {
  RationalVector b{Rational(3), Rational(-5)};
  auto x = solve_preimage(SparseMatrix::identity(2), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  auto none = solve_preimage(SparseMatrix(2, 2), b);
  CHECK(!none.has_value());

  auto half = solve_preimage(from_rows({{2}}, 1), {Rational(1)});
  REQUIRE(half.has_value());
  CHECK((*half)[0] == Rational(1, 2));

  CHECK_THROWS_AS(solve_preimage(SparseMatrix(2, 2), {Rational(1)}), std::invalid_argument);
}

TEST_CASE("kernel and solve are exact on random matrices") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    SparseMatrix m = random_matrix(rng, 6, 8);
    auto kb = kernel_basis(m);
    CHECK(rank(m) + kb.size() == m.cols());
    for (const auto& v : kb) CHECK(is_zero_vec(m.apply(v)));

    // b in the image: apply to a random x
    RationalVector x0(m.cols(), Rational(0));
    std::uniform_int_distribution<int> val(-3, 3);
    for (auto& v : x0) v = Rational(val(rng), 1 + (trial % 3));
    RationalVector b = m.apply(x0);
    auto x = solve_preimage(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);

    // absent => genuinely inconsistent: rank([m|b]) > rank(m)
    RationalVector b2 = b;
    if (!b2.empty()) b2[0] += Rational(1);
    auto x2 = solve_preimage(m, b2);
    if (!x2) {
      SparseMatrix aug(m.rows(), m.cols() + 1);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (const auto& [c, v] : m.row(r)) aug.add(r, c, v);
        aug.add(r, m.cols(), b2[r]);
      }
      CHECK(rank(aug) == rank(m) + 1);
    } else {
      CHECK(m.apply(*x2) == b2);
    }
  }
}

TEST_CASE("rank invariant under random permutations") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    SparseMatrix m = random_matrix(rng, 7, 9);
    std::vector<std::size_t> rp(7), cp(9);
    for (std::size_t i = 0; i < 7; ++i) rp[i] = i;
    for (std::size_t i = 0; i < 9; ++i) cp[i] = i;
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    CHECK(rank(m.permuted(rp, cp)) == rank(m));
  }
}

TEST_CASE("elimination stats are populated") {
  EliminationStats st;
  SparseMatrix m = from_rows({{2, 3, 0}, {0, 5, 7}, {1, 0, 11}}, 3);
  CHECK(rank(m, &st) == 3);
  CHECK(st.max_bits >= 4);
  CHECK(st.pivot_count == 3);
}
