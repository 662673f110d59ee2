#include <doctest.h>

#include "frobkit/enumerate.hpp"
#include "frobkit/error.hpp"
#include "frobkit/matrix.hpp"
#include "frobkit/sample.hpp"
#include "oracle.hpp"

using namespace frobkit;

TEST_CASE("outer product and commutator") {
  const Field f = Field::prime(3);
  CHECK(outer(Mat::unit_col(f, 2, 0), Mat::unit_row(f, 2, 1)) == Mat::unit(f, 2, 0, 1));
  Rng rng(2);
  const Mat b = sample::matrix(rng, f, 3, 3);
  CHECK(commutator(Mat::identity(f, 3), b).is_zero());
}

TEST_CASE("transpose of a companion block moves the ones to the superdiagonal") {
  const Field q = Field::rationals();
  const Mat c = Mat::from_ints(q, 3, 3, {0, 0, 1, 1, 0, -3, 0, 1, 3});
  CHECK(c.transpose() == Mat::from_ints(q, 3, 3, {0, 1, 0, 0, 0, 1, 1, -3, 3}));
}

TEST_CASE("solving") {
  const Field f = Field::prime(3);
  const Mat e1 = Mat::unit_col(f, 2, 0);
  auto r = solve_linear(Mat::identity(f, 2), e1);
  CHECK(r.consistent);
  CHECK(*r.solution == e1);
  CHECK(r.kernel.empty());

  r = solve_linear(Mat(f, 2, 2), e1);
  CHECK_FALSE(r.consistent);
  CHECK_FALSE(r.solution.has_value());

  const auto k = kernel_basis(Mat::unit(f, 2, 1, 0));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Mat::unit_col(f, 2, 1));
}

TEST_CASE("determinant and inverse against the Leibniz oracle") {
  for (Field f : {Field::prime(3), Field::prime(11), Field::finite(5, 2), Field::rationals()}) {
    Rng rng = Rng(7).split(f.tag());
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = rng.below(6);
      const Mat a = sample::matrix(rng, f, n, n);
      CHECK(det(a) == oracle::det(a));
      CHECK(is_invertible(a) == !oracle::det(a).is_zero());
      if (is_invertible(a)) {
        CHECK(a * inverse(a) == Mat::identity(f, n));
        CHECK(inverse(a) * a == Mat::identity(f, n));
      } else {
        CHECK_THROWS_AS(inverse(a), Error);
      }
    }
  }
  CHECK(det(Mat(Field::prime(3), 0, 0)).is_one());
}

TEST_CASE("rank-nullity, kernels and column spaces") {
  for (Field f : {Field::prime(3), Field::finite(3, 2), Field::rationals()}) {
    Rng rng = Rng(8).split(f.tag());
    for (int t = 0; t < 80; ++t) {
      const std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
      // Low-rank products make non-trivial kernels common.
      const std::size_t inner = 1 + rng.below(4);
      const Mat a = sample::matrix(rng, f, r, inner) * sample::matrix(rng, f, inner, c);
      const auto ker = kernel_basis(a);
      CHECK(rank(a) + ker.size() == c);
      for (const auto& k : ker) CHECK((a * k).is_zero());
      CHECK(column_basis(a).size() == rank(a));
      CHECK(rank(a) == rank(a.transpose()));

      const Mat x = sample::matrix(rng, f, c, 1);
      const auto s = solve_linear(a, a * x);
      REQUIRE(s.consistent);
      CHECK(a * *s.solution == a * x);
    }
  }
}

TEST_CASE("reduced row echelon form") {
  const Field f = Field::prime(5);
  const auto r = rref(Mat::from_ints(f, 2, 3, {2, 4, 1, 1, 2, 4}));
  CHECK(r.pivots == std::vector<std::size_t>{0, 2});
  CHECK(r.reduced == Mat::from_ints(f, 2, 3, {1, 2, 0, 0, 0, 1}));
}

TEST_CASE("|GL_2(F_q)| by enumeration") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Field f = Field::finite_order(q);
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < q * q * q * q; ++i) count += is_invertible(matrix_from_index(f, 2, 2, i));
    CHECK(count == (q * q - 1) * (q * q - q));
  }
}

TEST_CASE("index enumeration round trips") {
  const Field f = Field::finite(3, 2);
  for (std::uint64_t i = 0; i < 500; i += 7) CHECK(matrix_index(matrix_from_index(f, 2, 2, i)) == i);
  CHECK(bounded_power(3, 8, 6561) == 6561u);
  CHECK_FALSE(bounded_power(3, 9, 6561).has_value());
  CHECK_FALSE(bounded_power(1u << 31, 4, ~std::uint64_t{0}).has_value());
}

TEST_CASE("vec and blocks") {
  const Field f = Field::prime(7);
  Rng rng(9);
  const Mat b = sample::matrix(rng, f, 3, 2);
  CHECK(unvec(vec(b), 3, 2) == b);
  CHECK(vec(b)(1, 0) == b(0, 1));
  const Mat a = sample::matrix(rng, f, 2, 2);
  const Mat s = direct_sum(a, b.block(0, 0, 1, 1));
  CHECK(s.block(0, 0, 2, 2) == a);
  CHECK(s(2, 2) == b(0, 0));
  CHECK(s(0, 2).is_zero());
  CHECK(power(a, 5) == a * a * a * a * a);
  CHECK(power(a, 0) == Mat::identity(f, 2));
}

TEST_CASE("shape and field errors") {
  const Field f = Field::prime(3);
  CHECK_THROWS_AS(Mat(f, 2, 2) * Mat(f, 3, 3), Error);
  CHECK_THROWS_AS(Mat(f, 2, 2) + Mat(Field::prime(5), 2, 2), Error);
  CHECK_THROWS_AS(det(Mat(f, 2, 3)), Error);
  CHECK_THROWS_AS(Mat(f, 2, 2, {f.one()}), Error);
}
