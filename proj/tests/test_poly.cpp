#include <doctest.h>

#include "frobkit/error.hpp"
#include "frobkit/poly.hpp"
#include "frobkit/random.hpp"

using namespace frobkit;

namespace {

Poly random_poly(Rng& rng, Field f, std::size_t max_degree) {
  std::vector<Elem> c;
  const std::size_t d = rng.below(max_degree + 1);
  for (std::size_t i = 0; i <= d; ++i) c.push_back(rng.element(f));
  return Poly(f, std::move(c));
}

}  // namespace

TEST_CASE("printing") {
  const Field q = Field::rationals();
  const Poly x = Poly::x(q);
  const Poly one = Poly::constant(q.one());
  CHECK((x - one).pow(3).to_string() == "x^3-3x^2+3x-1");
  CHECK(Poly(q).to_string() == "0");
  CHECK(one.to_string() == "1");
  CHECK(Poly::from_ints(Field::prime(3), {2, 0, 1}).to_string() == "x^2+2");
  CHECK(Poly::from_ints(q, {0, -1}).to_string() == "-x");
  CHECK(Poly::from_ints(q, {-1, 0, 2}).to_string() == "2x^2-1");
}

TEST_CASE("small examples over F3") {
  const Field f = Field::prime(3);
  const Poly x2m1 = Poly::from_ints(f, {-1, 0, 1});
  const Poly xm1 = Poly::from_ints(f, {-1, 1});
  CHECK(gcd(x2m1, xm1) == xm1);
  CHECK(Poly::from_ints(f, {0, 0, 0, 1}).derivative().is_zero());
  CHECK(Poly(f).degree() == kNegInfDegree);
  CHECK(xm1.pow(3) == Poly::from_ints(f, {-1, 0, 0, 1}));
}

TEST_CASE("long division over Q") {
  const Field q = Field::rationals();
  const auto [quo, rem] = divmod(Poly::from_ints(q, {-1, 3, -3, 1}), Poly::from_ints(q, {-1, 1}));
  CHECK(quo == Poly::from_ints(q, {1, -2, 1}));
  CHECK(rem.is_zero());
}

TEST_CASE("division, gcd and Bezout identities on random inputs") {
  for (Field f : {Field::prime(3), Field::prime(7), Field::finite(3, 2), Field::rationals()}) {
    Rng rng = Rng(11).split(f.tag());
    for (int t = 0; t < 200; ++t) {
      const Poly a = random_poly(rng, f, 7);
      const Poly b = random_poly(rng, f, 5);
      if (b.is_zero()) continue;
      const auto [quo, rem] = divmod(a, b);
      CHECK(quo * b + rem == a);
      CHECK(rem.degree() < b.degree());

      const Poly g = gcd(a, b);
      CHECK(g.is_monic());
      CHECK((a % g).is_zero());
      CHECK((b % g).is_zero());
      const auto [d, s, u] = xgcd(a, b);
      CHECK(d == g);
      CHECK(s * a + u * b == d);

      const Poly l = lcm(a, b);
      if (!a.is_zero()) CHECK((l % a).is_zero());
      CHECK((l % b).is_zero());
    }
  }
}

TEST_CASE("pow_mod agrees with repeated mul_mod") {
  const Field f = Field::prime(5);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const Poly m = Poly::monomial(f.one(), 4) + random_poly(rng, f, 3);
    const Poly a = random_poly(rng, f, 6);
    Poly expect = Poly::constant(f.one()) % m;
    for (unsigned e = 0; e < 30; ++e) {
      CHECK(pow_mod(a, mpz_class(e), m) == expect);
      expect = mul_mod(expect, a, m);
    }
  }
}

TEST_CASE("evaluation and derivative") {
  const Field f = Field::prime(7);
  const Poly p = Poly::from_ints(f, {1, 2, 3});  // 3x^2 + 2x + 1
  CHECK(p(f.from_int(2)) == f.from_int(17));
  CHECK(p.derivative() == Poly::from_ints(f, {2, 6}));
  CHECK(p.monic().is_monic());
  CHECK(p.leading() == f.from_int(3));
}

TEST_CASE("text format round trip") {
  const Field f3 = Field::prime(3);
  CHECK(to_text(Poly::from_ints(f3, {2, 0, 1})) == "Fq p=3 k=1 | 2,0,1");
  CHECK(parse_poly("Fq p=3 k=1 | 2,0,1") == Poly::from_ints(f3, {2, 0, 1}));
  CHECK(parse_poly("Q | 1/2, -3") == Poly(Field::rationals(), {Field::rationals().parse("1/2"), Field::rationals().from_int(-3)}));
  Rng rng(5);
  for (Field f : {f3, Field::finite(5, 2), Field::rationals(), Field::extension(3, {2, 1, 1})})
    for (int t = 0; t < 20; ++t) {
      const Poly p = random_poly(rng, f, 6);
      CHECK(parse_poly(to_text(p)) == p);
    }
  CHECK_THROWS_AS(parse_poly("Fq p=3 | 1"), Error);
  CHECK_THROWS_AS(parse_poly("2,0,1"), Error);
  CHECK_THROWS_AS(parse_poly("Fq p=4 k=1 | 1"), Error);
}

TEST_CASE("rational functions reduce to lowest terms") {
  const Field q = Field::rationals();
  const RationalFunction r(Poly::from_ints(q, {-2, 0, 2}), Poly::from_ints(q, {-1, 1}));
  CHECK(r.numerator() == Poly::from_ints(q, {2, 2}));
  CHECK(r.denominator().is_one());
  const RationalFunction s(Poly::from_ints(q, {1, 1}), Poly::from_ints(q, {0, 2}));
  CHECK(s.denominator() == Poly::from_ints(q, {0, 1}));
  CHECK((s * s.inverse()).numerator().is_one());
  CHECK_THROWS_AS(RationalFunction(Poly::from_ints(q, {1}), Poly(q)), Error);
}

TEST_CASE("ordering") {
  const Field f = Field::prime(3);
  CHECK(Poly::from_ints(f, {2, 1}).compare(Poly::from_ints(f, {0, 0, 1})) < 0);
  CHECK(Poly::from_ints(f, {1, 1}).compare(Poly::from_ints(f, {2, 1})) < 0);
  CHECK(Poly::from_ints(f, {1, 1}).compare(Poly::from_ints(f, {1, 1})) == 0);
}
