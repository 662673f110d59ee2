#include <doctest.h>

#include "frobkit/charpoly.hpp"
#include "frobkit/error.hpp"
#include "frobkit/rank_one.hpp"
#include "frobkit/sample.hpp"
#include "oracle.hpp"

using namespace frobkit;

namespace {

std::vector<Elem> ints(Field f, std::initializer_list<std::int64_t> v) {
  std::vector<Elem> out;
  for (auto x : v) out.push_back(f.from_int(x));
  return out;
}

const Field f3 = Field::prime(3);
const Mat e21 = Mat::unit(f3, 2, 1, 0);
const Mat e1 = Mat::unit_col(f3, 2, 0);
const Mat e2 = Mat::unit_col(f3, 2, 1);

}  // namespace

TEST_CASE("moments") {
  CHECK(moments(e21, e1, e2.transpose(), 2).m == ints(f3, {0, 1}));
  CHECK(moments(e21, Mat(f3, 2, 1), e2.transpose(), 4).all_zero());
  CHECK(moments(Mat::identity(f3, 2), e1, e1.transpose(), 4).m == ints(f3, {1, 1, 1, 1}));

  Rng rng(3);
  const Field f = Field::finite(5, 2);
  for (int t = 0; t < 30; ++t) {
    const Triple tr = sample::triple(rng, f, 4);
    const auto m = moments(tr, 6);
    for (std::size_t j = 0; j < 6; ++j) CHECK(m.m[j] == (tr.phi * power(tr.A, j) * tr.v).scalar());
  }
}

TEST_CASE("update formula: worked example") {
  const auto c = principal_minor_sums(e21);
  CHECK(c == ints(f3, {1, 0, 0}));
  const auto m = moments(e21, e1, e2.transpose(), 2);
  const auto updated = ck_update(c, m, f3.one());
  CHECK(updated == ints(f3, {1, 0, -1}));
  CHECK(charpoly_from_minor_sums(updated, f3) == Poly::from_ints(f3, {-1, 0, 1}));
  CHECK(charpoly(Mat::from_ints(f3, 2, 2, {0, 1, 1, 0})) == Poly::from_ints(f3, {-1, 0, 1}));
}

TEST_CASE("update formula: trivial cases") {
  Rng rng(1);
  const Field f = Field::prime(7);
  for (int t = 0; t < 50; ++t) {
    const Triple tr = sample::triple(rng, f, 4);
    const auto c = principal_minor_sums(tr.A);
    CHECK(ck_update(c, moments(tr, 4), f.zero()) == c);
    const Triple free = sample::moment_free(rng, f, 4);
    const auto cf = principal_minor_sums(free.A);
    for (std::int64_t lambda = 0; lambda < 7; ++lambda) CHECK(ck_update(cf, moments(free, 4), f.from_int(lambda)) == cf);
  }
}

TEST_CASE("update formula matches the minor sums of the perturbed matrix") {
  for (Field f : {Field::prime(2), Field::prime(3), Field::finite(3, 2), Field::finite(2, 2), Field::rationals()}) {
    Rng rng = Rng(44).split(f.tag());
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 1 + rng.below(5);
      const Triple tr = sample::triple(rng, f, n);
      const Elem lambda = rng.element(f);
      const auto updated = ck_update(oracle::minor_sums(tr.A), moments(tr, n), lambda);
      CHECK(updated == oracle::minor_sums(tr.A + lambda * outer(tr.v, tr.phi)));
    }
  }
}

TEST_CASE("update formula argument checks") {
  const auto c = ints(f3, {1, 0, 0});
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ConfigError;
  };
  CHECK(code([&] { (void)ck_update(c, MomentSequence{ints(f3, {0})}, f3.one()); }) == ErrorCode::LengthMismatch);
  CHECK(code([&] { (void)ck_update({}, MomentSequence{}, f3.one()); }) == ErrorCode::LengthMismatch);
  CHECK(code([&] { (void)ck_update(ints(f3, {2, 0, 0}), MomentSequence{ints(f3, {0, 0})}, f3.one()); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("Faddeev chain") {
  const auto chain = faddeev_chain(e21);
  REQUIRE(chain.size() == 3);
  CHECK(chain[0] == Mat::identity(f3, 2));
  CHECK(chain[1] == -e21);
  CHECK(chain[2].is_zero());

  for (Field f : {Field::prime(5), Field::finite(3, 2), Field::rationals()}) {
    Rng rng = Rng(12).split(f.tag());
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + rng.below(6);
      const Mat a = sample::matrix(rng, f, n, n);
      const auto ch = faddeev_chain(a);
      REQUIRE(ch.size() == n + 1);
      CHECK(ch.front() == Mat::identity(f, n));
      CHECK(ch.back().is_zero());
      // C_{n+1} = (-1)^n P_A(A), expanded through the recursion.
      const auto c = oracle::minor_sums(a);
      for (std::size_t k = 1; k < n; ++k)
        CHECK(ch[k] == c[k] * Mat::identity(f, n) - a * ch[k - 1]);
    }
  }
}

TEST_CASE("rank-one perturbation map") {
  const Triple t(e21, e1, e2.transpose());
  const Triple moved = nu_lambda(t, f3.one());
  CHECK(moved.A == Mat::from_ints(f3, 2, 2, {0, 1, 1, 0}));
  CHECK(moved.v == e1);
  CHECK(moved.phi == e2.transpose());
  CHECK(nu_lambda(t, f3.zero()) == t);

  Rng rng(8);
  const Field f = Field::prime(7);
  for (int i = 0; i < 100; ++i) {
    const Triple tr = sample::triple(rng, f, 1 + rng.below(4));
    const Elem a = rng.element(f), b = rng.element(f);
    CHECK(nu_lambda(nu_lambda(tr, a), b) == nu_lambda(tr, a + b));
  }
}

TEST_CASE("entry normalizer") {
  CHECK(entry_normalizer_search(Mat(f3, 2, 2)).is_zero);
  const Mat i2 = Mat::identity(f3, 2);
  const auto r = entry_normalizer_search(i2);
  REQUIRE(r.B.has_value());
  CHECK(*r.B == i2);

  Rng rng(10);
  for (Field f : {f3, Field::finite(3, 2), Field::rationals()}) {
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 1 + rng.below(4);
      Mat m = sample::matrix(rng, f, n, n);
      if (t % 3 == 0) m = Mat::unit(f, n, 0, n - 1);  // zero diagonal
      const auto res = entry_normalizer_search(m);
      if (m.is_zero()) {
        CHECK(res.is_zero);
        continue;
      }
      REQUIRE(res.B.has_value());
      CHECK_FALSE((*res.B * m * inverse(*res.B))(0, 0).is_zero());
    }
  }
  const auto e12 = entry_normalizer_search(Mat::unit(f3, 2, 0, 1));
  REQUIRE(e12.B.has_value());
  CHECK_FALSE((*e12.B * Mat::unit(f3, 2, 0, 1) * inverse(*e12.B))(0, 0).is_zero());
}
