#include <functional>

#include <doctest.h>

#include "frobkit/canonical.hpp"
#include "frobkit/charpoly.hpp"
#include "frobkit/enumerate.hpp"
#include "frobkit/error.hpp"
#include "frobkit/geometry.hpp"
#include "frobkit/sample.hpp"

using namespace frobkit;

namespace {

const Field f3 = Field::prime(3);
const Mat e21 = Mat::unit(f3, 2, 1, 0);
const Mat e1 = Mat::unit_col(f3, 2, 0);
const Mat e2 = Mat::unit_col(f3, 2, 1);

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ConfigError;
}

// Q_A by trying every B in gl_n(F_q).
bool qa_brute(const Triple& t) {
  const Mat target = outer(t.v, t.phi);
  const std::size_t n = t.dim();
  const std::uint64_t total = *bounded_power(t.field().order(), n * n, ~std::uint64_t{0});
  for (std::uint64_t i = 0; i < total; ++i)
    if (commutator(t.A, matrix_from_index(t.field(), n, n, i)) == target) return true;
  return false;
}

// R_A straight from the definition, with 2n moments for good measure.
bool ra_brute(const Triple& t) {
  Mat p = Mat::identity(t.field(), t.dim());
  for (std::size_t j = 0; j < 2 * t.dim() + 1; ++j) {
    if (!(t.phi * p * t.v).scalar().is_zero()) return false;
    p = p * t.A;
  }
  return true;
}

}  // namespace

TEST_CASE("group action: examples") {
  Rng rng(1);
  const Triple t = sample::triple(rng, f3, 3);
  CHECK(act(GroupElem::identity(f3, 3), t) == t);
  const GroupElem flip(Mat::identity(f3, 3), -1);
  const Triple ft = act(flip, t);
  CHECK(ft.A == t.A.transpose());
  CHECK(ft.v == t.phi.transpose());
  CHECK(ft.phi == t.v.transpose());
  CHECK(act(flip, ft) == t);
  CHECK_THROWS_AS(GroupElem(Mat(f3, 2, 2), 1), Error);
  CHECK_THROWS_AS(GroupElem(Mat::identity(f3, 2), 0), Error);
}

TEST_CASE("group action is a homomorphism and preserves delta and the pairing") {
  for (Field f : {f3, Field::finite(5, 2), Field::rationals()}) {
    Rng rng = Rng(2).split(f.tag());
    for (int i = 0; i < 150; ++i) {
      const std::size_t n = 1 + rng.below(4);
      const Triple t = sample::triple(rng, f, n);
      const GroupElem a(sample::invertible(rng, f, n), rng.below(2) ? 1 : -1);
      const GroupElem b(sample::invertible(rng, f, n), rng.below(2) ? 1 : -1);
      CHECK(act(a * b, t) == act(a, act(b, t)));
      CHECK(delta(act(a, t)) == delta(t));
      CHECK(quad_form(act(a, t).v, act(a, t).phi) == quad_form(t.v, t.phi));
      CHECK(in_RA(act(a, t)).member == in_RA(t).member);
    }
  }
}

TEST_CASE("delta and the pairing") {
  const Field q = Field::rationals();
  const Triple t(Mat::identity(q, 2), Mat::unit_col(q, 2, 0), Mat::unit_row(q, 2, 1));
  CHECK(delta(t) == Poly::from_ints(q, {1, -2, 1}));
  CHECK(quad_form(e1, e2.transpose()).is_zero());
  CHECK(quad_form(e1, e1.transpose()).is_one());
}

TEST_CASE("R_A membership: examples") {
  CHECK(in_RA(Triple(e21, Mat(f3, 2, 1), e1.transpose())).member);
  const auto r = in_RA(Triple(e21, e1, e2.transpose()));
  CHECK_FALSE(r.member);
  CHECK(r.witness == 1u);
  CHECK(in_RA(Triple(e21, e2, e1.transpose())).member);
}

TEST_CASE("Q_A membership: examples") {
  Rng rng(3);
  const Mat a = sample::matrix(rng, f3, 3, 3);
  const auto zero_v = in_QA(Triple(a, Mat(f3, 3, 1), sample::matrix(rng, f3, 1, 3)));
  CHECK(zero_v.member);
  CHECK(zero_v.witness->is_zero());
  CHECK_FALSE(in_QA(Triple(Mat(f3, 2, 2), e1, e1.transpose())).member);

  const Triple t(e21, e2, e1.transpose());
  const auto qa = in_QA(t);
  REQUIRE(qa.member);
  CHECK(commutator(e21, *qa.witness) == outer(e2, e1.transpose()));
  CHECK(commutator(e21, Mat::diag({f3.one(), f3.zero()}, f3)) == outer(e2, e1.transpose()));
}

TEST_CASE("Q_A and R_A against brute force over F3, n = 2") {
  std::uint64_t qa = 0, ra = 0;
  for (std::uint64_t ai = 0; ai < 81; ai += 4)
    for (std::uint64_t vi = 0; vi < 9; ++vi)
      for (std::uint64_t pi = 0; pi < 9; ++pi) {
        const Triple t(matrix_from_index(f3, 2, 2, ai), matrix_from_index(f3, 2, 1, vi),
                       matrix_from_index(f3, 1, 2, pi));
        const bool q = in_QA(t).member, r = in_RA(t).member;
        CHECK(q == qa_brute(t));
        CHECK(r == ra_brute(t));
        if (q) CHECK(r);
        qa += q;
        ra += r;
      }
  CHECK(qa > 0);
  CHECK(ra > qa);
}

TEST_CASE("rho_f") {
  const Triple t(e21, e1, e2.transpose());
  const Triple moved = rho_f(t, RationalFunction(Poly::from_ints(f3, {1, 1})));
  CHECK(moved.A == e21);
  CHECK(moved.v == e1 + e2);
  CHECK(moved.phi == (e1 + e2).transpose());
  CHECK(rho_f(t, RationalFunction(Poly::constant(f3.one()))) == t);
  CHECK(code_of([&] { (void)rho_f(t, RationalFunction(Poly::x(f3))); }) == ErrorCode::NotCoprime);
  CHECK(code_of([&] {
          (void)rho_f(t, RationalFunction(Poly::constant(f3.one()), Poly::from_ints(f3, {0, 0, 1})));
        }) == ErrorCode::NotCoprime);

  // rho_f preserves delta and R_A, and rho_f rho_g = rho_{fg}.
  Rng rng(4);
  const Field f = Field::prime(7);
  for (int i = 0; i < 60; ++i) {
    const Triple tr = (i % 2) ? sample::moment_free(rng, f, 3) : sample::triple(rng, f, 3);
    const Poly p = charpoly(tr.A);
    auto draw = [&] {
      for (;;) {
        Poly c = sample::monic(rng, f, rng.below(3));
        if (gcd(c, p).is_one()) return c;
      }
    };
    const RationalFunction r1(draw(), draw()), r2(draw(), draw());
    const Triple once = rho_f(tr, r1);
    CHECK(delta(once) == delta(tr));
    CHECK(in_RA(once).member == in_RA(tr).member);
    CHECK(rho_f(once, r2) == rho_f(tr, r1 * r2));
  }
}

TEST_CASE("filtration: examples") {
  const Filtration fl = filtration(Poly::x(f3), 2);
  CHECK(fl.A == e21);
  REQUIRE(fl.U.size() == 3);
  CHECK(fl.U[0].cols() == 2);
  REQUIRE(fl.U[1].cols() == 1);
  CHECK(rank(hconcat({fl.U[1], e2}, f3, 2)) == 1);
  CHECK(fl.U[2].cols() == 0);
  CHECK(fl.Ustar[0].rows() == 2);
  REQUIRE(fl.Ustar[1].rows() == 1);
  CHECK(rank(vconcat({fl.Ustar[1], e1.transpose()}, f3, 2)) == 1);
  CHECK(fl.Ustar[2].rows() == 0);
  CHECK(check_dual_filtration(fl).ok());

  const Filtration empty = filtration(Poly::x(f3), 0);
  CHECK(empty.A.rows() == 0);
  CHECK(empty.U.size() == 1);

  const Filtration quad = filtration(Poly::from_ints(f3, {1, 0, 1}), 2);
  CHECK(quad.A.rows() == 4);
  CHECK(quad.U[0].cols() == 4);
  CHECK(quad.U[1].cols() == 2);
  CHECK(quad.U[2].cols() == 0);
  CHECK(check_dual_filtration(quad).ok());

  CHECK(code_of([] { (void)filtration(Poly::from_ints(f3, {-1, 0, 1}), 1); }) == ErrorCode::NotIrreducible);
  CHECK(code_of([] { (void)filtration(Poly::from_ints(f3, {1, 2}), 1); }) == ErrorCode::NotMonic);
  CHECK(code_of([] { (void)filtration(Poly::x(Field::rationals()), 1); }) == ErrorCode::NotFiniteField);
  CHECK(code_of([] { (void)filtration(Poly::x(Field::prime(2)), 1); }) == ErrorCode::EvenCharacteristicUnsupported);
}

TEST_CASE("R_A as a union of filtration strata") {
  const auto one = ra_structure_check(Poly::x(f3), 1);
  CHECK(one.holds);
  CHECK(one.pairs == 9);
  CHECK(one.ra_members == 5);  // phi v = 0 in F_3 x F_3
  const auto two = ra_structure_check(Poly::x(f3), 2);
  CHECK(two.holds);
  CHECK(two.pairs == 81);
  CHECK(two.per_stratum.size() == 3);
  CHECK(ra_structure_check(Poly::from_ints(f3, {1, 0, 1}), 1).holds);
  CHECK(ra_structure_check(Poly::from_ints(f3, {1, 1}), 2).holds);
  CHECK(ra_structure_check(Poly::x(Field::prime(5)), 2).holds);
  CHECK(code_of([] { (void)ra_structure_check(Poly::from_ints(f3, {1, 0, 1}), 2, 6560); }) ==
        ErrorCode::TooLargeForExhaustive);
}

TEST_CASE("equivalence report: examples") {
  const auto member = linalg_equivalence_report(Triple(e21, e2, e1.transpose()));
  CHECK((member.cond1 && member.cond2 && member.cond3));
  const auto outside = linalg_equivalence_report(Triple(e21, e1, e2.transpose()));
  CHECK_FALSE((outside.cond1 || outside.cond2 || outside.cond3));
  const auto zero = linalg_equivalence_report(Triple(e21, Mat(f3, 2, 1), e2.transpose()));
  CHECK((zero.cond1 && zero.cond2 && zero.cond3));
  CHECK(member.lambdas_tested.size() == 3);
  CHECK(code_of([] {
          const Field f2 = Field::prime(2);
          (void)linalg_equivalence_report(Triple(Mat(f2, 1, 1), Mat(f2, 1, 1), Mat(f2, 1, 1)));
        }) == ErrorCode::EvenCharacteristicUnsupported);
}

TEST_CASE("equivalence report over Q") {
  Rng rng(5);
  const Field q = Field::rationals();
  for (int i = 0; i < 40; ++i) {
    const Triple t = (i % 2) ? sample::moment_free(rng, q, 3) : sample::triple(rng, q, 3);
    CHECK(linalg_equivalence_report(t).consistent());
  }
}

TEST_CASE("delta is fixed by nu_lambda on R_A, exhaustively over F3, n = 2") {
  for (std::uint64_t ai = 0; ai < 81; ++ai)
    for (std::uint64_t vi = 0; vi < 9; ++vi)
      for (std::uint64_t pi = 0; pi < 9; ++pi) {
        const Triple t(matrix_from_index(f3, 2, 2, ai), matrix_from_index(f3, 2, 1, vi),
                       matrix_from_index(f3, 1, 2, pi));
        if (!in_RA(t).member) continue;
        CHECK(quad_form(t.v, t.phi).is_zero());
        for (std::uint64_t l = 0; l < 3; ++l) CHECK(delta(nu_lambda(t, f3.element(l))) == delta(t));
      }
}

TEST_CASE("direct sums") {
  Rng rng(6);
  const auto zeros = qa_directsum_check(Mat(f3, 1, 1), Mat(f3, 1, 1), 0, rng);
  CHECK(zeros.holds);
  CHECK(zeros.pairs == 81);
  // Blockwise members with a cross term are not joint members when the
  // blocks share their spectrum: v = (1, 0), phi = (0, 1).
  CHECK(zeros.converse_shared_spectrum_gaps > 0);
  CHECK_FALSE(in_QA(Triple(Mat(f3, 2, 2), e1, e2.transpose())).member);

  for (std::int64_t c = 0; c < 3; ++c) {
    const auto r = qa_directsum_check(e21, Mat::from_ints(f3, 1, 1, {c}), 0, rng);
    CHECK(r.holds);
    CHECK(r.pairs == 729);
    CHECK(r.qa_not_ra == 0);
    if (c != 0) {
      CHECK(r.coprime_charpolys);
      CHECK(r.joint_members == r.blockwise_members);
    }
  }
  const auto sampled = qa_directsum_check(e21, e21, 500, rng, 100);
  CHECK(sampled.pairs == 500);
  CHECK(sampled.holds);
}
