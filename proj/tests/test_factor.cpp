#include <doctest.h>

#include "frobkit/error.hpp"
#include "frobkit/factor.hpp"
#include "oracle.hpp"

using namespace frobkit;

namespace {

std::vector<std::pair<std::string, unsigned>> shape(const std::vector<Factor>& fs) {
  std::vector<std::pair<std::string, unsigned>> out;
  for (const auto& f : fs) out.emplace_back(f.f.to_string(), f.multiplicity);
  return out;
}

using Shape = std::vector<std::pair<std::string, unsigned>>;

}  // namespace

TEST_CASE("spec examples over F3") {
  const Field f = Field::prime(3);
  CHECK(shape(factor(Poly::from_ints(f, {0, -1, 0, 1}))) == Shape{{"x", 1}, {"x+1", 1}, {"x+2", 1}});
  CHECK(shape(factor(Poly::from_ints(f, {1, 0, 1}))) == Shape{{"x^2+1", 1}});
  CHECK(shape(factor(Poly::monomial(f.one(), 6))) == Shape{{"x", 6}});
  CHECK(is_irreducible(Poly::from_ints(f, {-1, 1})));
  CHECK_FALSE(is_irreducible(Poly::from_ints(f, {-1, 0, 1})));
  CHECK(is_irreducible(Poly::from_ints(f, {1, 0, 1})));
}

TEST_CASE("p-th powers are recovered") {
  const Field f = Field::prime(3);
  // (x + 1)^3 (x^2 + 1)^2 hides a cube behind x^3 + 1.
  const Poly p = Poly::from_ints(f, {1, 1}).pow(3) * Poly::from_ints(f, {1, 0, 1}).pow(2);
  CHECK(shape(factor(p)) == Shape{{"x+1", 3}, {"x^2+1", 2}});
  const Poly q = Poly::from_ints(f, {1, 0, 0, 1}).pow(3);  // (x+1)^9
  CHECK(shape(factor(q)) == Shape{{"x+1", 9}});
}

TEST_CASE("irreducible counts match the necklace formula") {
  for (Field f : {Field::prime(2), Field::prime(3), Field::prime(5), Field::finite(2, 2)}) {
    for (std::size_t d = 1; d <= (f.order() <= 3 ? 5u : 3u); ++d) {
      std::uint64_t count = 0;
      for (const auto& p : oracle::monics(f, d)) {
        const bool fast = is_irreducible(p);
        if (d <= 4) CHECK(fast == oracle::irreducible(p));
        count += fast;
      }
      CHECK(count == oracle::irreducible_count(f.order(), d));
    }
  }
}

TEST_CASE("factorization reassembles and has irreducible parts") {
  for (Field f : {Field::prime(3), Field::prime(5), Field::prime(7), Field::finite(3, 2), Field::finite(5, 2)}) {
    Rng rng = Rng(17).split(f.tag());
    for (int t = 0; t < 60; ++t) {
      // Products of random small factors, so repeated factors are common.
      Poly p = Poly::constant(rng.nonzero(f));
      const auto parts = 1 + rng.below(4);
      for (std::uint64_t i = 0; i < parts; ++i) {
        std::vector<Elem> c;
        const auto d = 1 + rng.below(3);
        for (std::uint64_t j = 0; j < d; ++j) c.push_back(rng.element(f));
        c.push_back(f.one());
        p *= Poly(f, c).pow(1 + rng.below(3));
      }
      const auto fs = factor(p, rng);
      CHECK(expand(fs, f) * Poly::constant(p.leading()) == p);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        CHECK(fs[i].f.is_monic());
        if (fs[i].f.degree() <= 4) CHECK(oracle::irreducible(fs[i].f));
        if (i > 0) CHECK(fs[i - 1].f.compare(fs[i].f) < 0);
      }
    }
  }
}

TEST_CASE("squarefree decomposition") {
  const Field f = Field::prime(5);
  const Poly a = Poly::from_ints(f, {1, 1});
  const Poly b = Poly::from_ints(f, {2, 0, 1});
  const auto sq = squarefree_decomposition(a * b.pow(2) * a.pow(5));
  Poly back = Poly::constant(f.one());
  for (const auto& s : sq) back *= s.f.pow(s.multiplicity);
  CHECK(back == a.pow(6) * b.pow(2));
}

TEST_CASE("distinct degree buckets") {
  const Field f = Field::prime(3);
  // x (x^2 + 1) (x^3 - x + 1)
  const Poly p = Poly::from_ints(f, {0, 1}) * Poly::from_ints(f, {1, 0, 1}) * Poly::from_ints(f, {1, -1, 0, 1});
  const auto dd = distinct_degree_factorization(p);
  REQUIRE(dd.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(dd[i].multiplicity == i + 1);
}

TEST_CASE("refusals") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ConfigError;
  };
  const Field q = Field::rationals();
  const Field f2 = Field::prime(2);
  Rng rng(1);
  CHECK(code([&] { (void)factor(Poly::from_ints(q, {1, 0, 1})); }) == ErrorCode::NotFiniteField);
  CHECK(code([&] { (void)factor(Poly(Field::prime(3))); }) == ErrorCode::InvalidArgument);
  CHECK(code([&] { (void)equal_degree_factorization(Poly::from_ints(f2, {0, 1, 1}), 1, rng); }) ==
        ErrorCode::EvenCharacteristicUnsupported);
  CHECK(code([&] { (void)is_irreducible(Poly::from_ints(Field::prime(3), {2})); }) == ErrorCode::InvalidArgument);
}
