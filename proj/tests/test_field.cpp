#include <doctest.h>

#include "frobkit/error.hpp"
#include "frobkit/field.hpp"
#include "frobkit/poly.hpp"

using namespace frobkit;

namespace {

// a + b u with u^2 = -r, r the constant term of u^2 + r; index a + p b.
struct Quadratic {
  unsigned p, r;
  unsigned mul(unsigned x, unsigned y) const {
    const unsigned a = x % p, b = x / p, c = y % p, d = y / p;
    const unsigned re = (a * c + (p - r) * b * d) % p;
    const unsigned im = (a * d + b * c) % p;
    return re + p * im;
  }
  unsigned add(unsigned x, unsigned y) const { return (x % p + y % p) % p + p * ((x / p + y / p) % p); }
};

void check_quadratic(std::uint64_t p, unsigned r) {
  const Field f = Field::finite(p, 2);
  const Quadratic o{static_cast<unsigned>(p), r};
  for (unsigned x = 0; x < p * p; ++x)
    for (unsigned y = 0; y < p * p; ++y) {
      CHECK((f.element(x) * f.element(y)).index() == o.mul(x, y));
      CHECK((f.element(x) + f.element(y)).index() == o.add(x, y));
    }
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const Field f = Field::prime(3);
  CHECK((f.from_int(2) + f.from_int(2)) == f.from_int(1));
  CHECK(f.from_int(2).inv() == f.from_int(2));
  CHECK(f.from_int(-1) == f.from_int(2));
  CHECK((f.from_int(1) - f.from_int(2)) == f.from_int(2));
  CHECK(f.from_int(2).pow(-1) == f.from_int(2));
  CHECK(f.from_int(0).pow(0).is_one());
}

TEST_CASE("default moduli") {
  CHECK(Field::finite(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field::finite(5, 2).modulus() == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(Field::finite(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(Field::finite(3, 2) == Field::finite_order(9));
  CHECK(Field::finite(3, 1) == Field::prime(3));
}

TEST_CASE("F9: u * u = -1") {
  const Field f = Field::finite(3, 2);
  const Elem u = f.generator();
  CHECK((u * u) == f.from_int(-1));
  CHECK((u * u).index() == 2);
}

TEST_CASE("quadratic extensions match a pair-arithmetic oracle") {
  check_quadratic(3, 1);  // u^2 + 1
  check_quadratic(5, 2);  // u^2 + 2
}

TEST_CASE("every nonzero element has an inverse and obeys Fermat") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{7, 1}, {3, 2}, {5, 2}, {2, 3}, {3, 3}, {2, 1}}) {
    const Field f = Field::finite(p, k);
    for (std::uint64_t i = 1; i < f.order(); ++i) {
      const Elem a = f.element(i);
      CHECK((a * a.inv()).is_one());
      CHECK(a.pow(static_cast<std::int64_t>(f.order() - 1)).is_one());
      CHECK((a / a).is_one());
    }
    CHECK((f.one() + f.one()).index() == (p == 2 ? 0u : 2u));
  }
}

TEST_CASE("characteristic is additive order of one") {
  for (std::uint64_t q : {4, 8, 9, 25, 27, 49}) {
    const Field f = Field::finite_order(q);
    Elem s = f.zero();
    for (std::uint64_t i = 0; i < f.characteristic(); ++i) s += f.one();
    CHECK(s.is_zero());
  }
}

TEST_CASE("rationals") {
  const Field q = Field::rationals();
  CHECK((q.parse("1/2") + q.parse("1/3")).to_string() == "5/6");
  CHECK(q.parse("3/6").to_string() == "1/2");
  CHECK(q.parse("-4/2") == q.from_int(-2));
  CHECK((q.parse("2/3").inv()).to_string() == "3/2");
  CHECK(q.from_int(2).pow(-3).to_string() == "1/8");
  CHECK_FALSE(q.is_finite());
  CHECK(q.tag() == "Q");
}

TEST_CASE("errors") {
  const Field f = Field::prime(5);
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ConfigError;  // sentinel: nothing thrown
  };
  CHECK(code([&] { (void)f.zero().inv(); }) == ErrorCode::DivisionByZero);
  CHECK(code([&] { (void)(f.one() / f.zero()); }) == ErrorCode::DivisionByZero);
  CHECK(code([&] { (void)(f.one() + Field::prime(3).one()); }) == ErrorCode::DescriptorMismatch);
  CHECK(code([&] { (void)(f.one() * Field::finite(5, 2).one()); }) == ErrorCode::DescriptorMismatch);
  CHECK(code([] { (void)Field::prime(4); }) == ErrorCode::InvalidArgument);
  CHECK(code([] { (void)Field::finite_order(6); }) == ErrorCode::InvalidArgument);
  CHECK(code([] { (void)Field::extension(3, {1, 0, 0, 1}); }) == ErrorCode::NotIrreducible);
  CHECK(code([] { (void)Field::rationals().parse("1/0"); }) == ErrorCode::ParseError);
  CHECK(code([] { (void)Field::finite(3, 2).parse("9"); }) == ErrorCode::ParseError);
  CHECK(code([] { (void)Field::prime(3).parse("x"); }) == ErrorCode::ParseError);
}

TEST_CASE("tags round trip, including a non-default modulus") {
  const Field custom = Field::extension(3, {2, 1, 1});
  CHECK_FALSE(custom == Field::finite(3, 2));
  CHECK(custom.tag() == "Fq p=3 k=2 m=2,1,1");
  for (Field f : {Field::prime(3), Field::finite(5, 2), Field::rationals(), custom})
    CHECK(parse_field_tag(f.tag()) == f);
}

TEST_CASE("prime field parse accepts negatives and reduces") {
  const Field f = Field::prime(7);
  CHECK(f.parse("-1").index() == 6);
  CHECK(f.parse("15").index() == 1);
  CHECK(f.element(3).to_string() == "3");
}
