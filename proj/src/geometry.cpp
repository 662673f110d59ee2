#include "frobkit/geometry.hpp"

#include "frobkit/canonical.hpp"
#include "frobkit/charpoly.hpp"
#include "frobkit/enumerate.hpp"
#include "frobkit/error.hpp"
#include "frobkit/factor.hpp"

namespace frobkit {

GroupElem::GroupElem(Mat g_, int sign_) : g(std::move(g_)), sign(sign_) {
  if (sign != 1 && sign != -1) raise(ErrorCode::InvalidArgument, "group sign must be +1 or -1");
  if (!is_invertible(g)) raise(ErrorCode::NotInvertible, "group element must be invertible");
}

GroupElem operator*(const GroupElem& a, const GroupElem& b) {
  if (a.sign == 1) return GroupElem(a.g * b.g, b.sign);
  return GroupElem(a.g * inverse(b.g).transpose(), -b.sign);
}

Triple act(const GroupElem& e, const Triple& t) {
  if (e.g.rows() != t.dim()) raise(ErrorCode::ShapeMismatch, "group element and triple differ in dimension");
  const Mat ginv = inverse(e.g);
  if (e.sign == 1) return Triple(e.g * t.A * ginv, e.g * t.v, t.phi * ginv);
  return Triple(e.g * t.A.transpose() * ginv, e.g * t.phi.transpose(), t.v.transpose() * ginv);
}

Poly delta(const Triple& t) { return charpoly(t.A); }

Elem quad_form(const Mat& v, const Mat& phi) {
  if (v.cols() != 1 || phi.rows() != 1 || v.rows() != phi.cols())
    raise(ErrorCode::ShapeMismatch, "quad_form needs n x 1 and 1 x n");
  return (phi * v).scalar();
}

RaMembership in_RA(const Triple& t, std::size_t moment_count) {
  const MomentSequence m = moments(t, moment_count);
  for (std::size_t j = 0; j < m.length(); ++j)
    if (!m.m[j].is_zero()) return {false, j};
  return {true, std::nullopt};
}

RaMembership in_RA(const Triple& t) { return in_RA(t, t.dim()); }

QaMembership in_QA(const Triple& t, const Mat& ad) {
  const std::size_t n = t.dim();
  const Mat rhs = outer(t.v, t.phi);
  if (rhs.is_zero()) return {true, Mat(t.field(), n, n)};
  const SolveResult s = solve_linear(ad, vec(rhs));
  if (!s.consistent) return {false, std::nullopt};
  Mat b = unvec(*s.solution, n, n);
  if (!(commutator(t.A, b) == rhs))
    raise(ErrorCode::AlgorithmDisagreement, "Q_A witness failed verification");
  return {true, std::move(b)};
}

QaMembership in_QA(const Triple& t) { return in_QA(t, commutator_operator(t.A)); }

Triple rho_f(const Triple& t, const RationalFunction& f) {
  const Poly chp = charpoly(t.A);
  if (!gcd(f.numerator(), chp).is_one() || !gcd(f.denominator(), chp).is_one())
    raise(ErrorCode::NotCoprime, "rho_f needs f coprime to the characteristic polynomial");
  const Mat fa = poly_at_matrix(f.numerator(), t.A) * inverse(poly_at_matrix(f.denominator(), t.A));
  return Triple(t.A, fa * t.v, t.phi * fa);
}

// --- filtration ------------------------------------------------------------

namespace {

// Basis rows of the annihilator {phi : phi u = 0 for u in span(cols)}.
Mat annihilator_rows(const Mat& cols, Field f, std::size_t n) {
  std::vector<Mat> rows;
  for (auto& k : kernel_basis(cols.transpose())) rows.push_back(k.transpose());
  return vconcat(rows, f, n);
}

bool same_row_space(const Mat& a, const Mat& b) {
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(vconcat({a, b}, a.field(), a.cols()));
}

}  // namespace

Filtration filtration(const Poly& f, unsigned s) {
  const Field fld = f.field();
  if (!fld.is_finite()) raise(ErrorCode::NotFiniteField, "filtration needs a finite field");
  if (fld.characteristic() == 2) raise(ErrorCode::EvenCharacteristicUnsupported, "filtration needs odd q");
  if (!f.is_monic()) raise(ErrorCode::NotMonic, "filtration needs a monic polynomial");
  if (f.degree() < 1 || !is_irreducible(f)) raise(ErrorCode::NotIrreducible, f.to_string() + " is not irreducible");
  Filtration out{f, s, companion(f.pow(s)), {}, {}};
  const std::size_t n = out.A.rows();
  const Mat fa = poly_at_matrix(f, out.A);
  Mat pw = Mat::identity(fld, n);
  for (unsigned i = 0; i <= s; ++i) {
    out.U.push_back(hconcat(column_basis(pw), fld, n));
    pw = pw * fa;
  }
  for (unsigned i = 0; i <= s; ++i) out.Ustar.push_back(annihilator_rows(out.U[s - i], fld, n));
  return out;
}

DualFiltrationCheck check_dual_filtration(const Filtration& fl) {
  DualFiltrationCheck c;
  const Field fld = fl.f.field();
  const std::size_t n = fl.A.rows();
  const auto k = static_cast<std::size_t>(fl.f.degree());
  c.dims_ok = true;
  for (unsigned i = 0; i <= fl.s; ++i)
    if (fl.U[i].cols() != (fl.s - i) * k || fl.Ustar[i].rows() != (fl.s - i) * k) c.dims_ok = false;
  c.nested = true;
  for (unsigned i = 0; i < fl.s; ++i)
    if (rank(hconcat({fl.U[i], fl.U[i + 1]}, fld, n)) != fl.U[i].cols()) c.nested = false;

  const Mat fa = poly_at_matrix(fl.f, fl.A);
  const Mat ginv = inverse(transpose_conjugator(fl.A));
  c.row_space_ok = true;
  c.transpose_map_ok = true;
  Mat pw = Mat::identity(fld, n);
  for (unsigned i = 0; i <= fl.s; ++i) {
    if (!same_row_space(fl.Ustar[i], pw)) c.row_space_ok = false;
    const Mat image = fl.U[i].transpose() * ginv;  // rows T(u) = u^t g^{-1}
    if (!same_row_space(fl.Ustar[i], image)) c.transpose_map_ok = false;
    pw = pw * fa;
  }
  return c;
}

RaStructureReport ra_structure_check(const Poly& f, unsigned s, std::uint64_t bound) {
  const Field fld = f.field();
  if (!fld.is_finite()) raise(ErrorCode::NotFiniteField, "exhaustive check needs a finite field");
  const auto k = static_cast<std::size_t>(std::max(f.degree(), 0));
  const std::size_t n = k * s;
  const std::uint64_t q = fld.order();
  const auto pairs = bounded_power(q, 2 * n, bound);
  if (!pairs) raise(ErrorCode::TooLargeForExhaustive, "q^(2n) exceeds the exhaustive bound");
  const Filtration fl = filtration(f, s);
  const std::uint64_t vectors = *bounded_power(q, n, bound);

  // Bit i of a mask: v in U_i, resp. phi in U*_{s-i} = U_i^perp.
  std::vector<Mat> phis;
  std::vector<std::uint32_t> phi_mask;
  for (std::uint64_t idx = 0; idx < vectors; ++idx) {
    Mat phi = matrix_from_index(fld, 1, n, idx);
    std::uint32_t mask = 0;
    for (unsigned i = 0; i <= s; ++i)
      if ((phi * fl.U[i]).is_zero()) mask |= 1u << i;
    phis.push_back(std::move(phi));
    phi_mask.push_back(mask);
  }

  RaStructureReport out;
  out.per_stratum.assign(s + 1, 0);
  out.holds = true;
  for (std::uint64_t vi = 0; vi < vectors; ++vi) {
    const Mat v = matrix_from_index(fld, n, 1, vi);
    std::uint32_t vmask = 0;
    for (unsigned i = 0; i <= s; ++i)
      if ((fl.Ustar[s - i] * v).is_zero()) vmask |= 1u << i;
    std::vector<Mat> kcols;
    Mat w = v;
    for (std::size_t j = 0; j < n; ++j) {
      kcols.push_back(w);
      w = fl.A * w;
    }
    const Mat kv = hconcat(kcols, fld, n);
    for (std::uint64_t pi = 0; pi < vectors; ++pi) {
      ++out.pairs;
      const bool in_r = (phis[pi] * kv).is_zero();
      const std::uint32_t both = vmask & phi_mask[pi];
      for (unsigned i = 0; i <= s; ++i)
        if (both & (1u << i)) ++out.per_stratum[i];
      if (in_r) ++out.ra_members;
      if (in_r != (both != 0) && out.holds) {
        out.holds = false;
        out.counterexample = std::make_pair(v, phis[pi]);
      }
    }
  }
  return out;
}

LinAlgReport linalg_equivalence_report(const Triple& t, std::int64_t rational_sample) {
  const Field f = t.field();
  if (f.characteristic() == 2)
    raise(ErrorCode::EvenCharacteristicUnsupported, "the equivalence needs characteristic != 2");
  LinAlgReport r;
  r.cond1 = in_RA(t).member;
  if (f.is_finite()) {
    for (std::uint64_t i = 0; i < f.order(); ++i) r.lambdas_tested.push_back(f.element(i));
  } else {
    for (std::int64_t i = 1; i <= rational_sample; ++i) {
      r.lambdas_tested.push_back(f.from_int(i));
      r.lambdas_tested.push_back(f.from_int(-i));
    }
  }
  const Poly base = charpoly(t.A);
  const Mat rank_one = outer(t.v, t.phi);
  r.cond2 = true;
  r.cond3 = false;
  for (const auto& lambda : r.lambdas_tested) {
    const bool same = charpoly(t.A + lambda * rank_one) == base;
    if (!same) r.cond2 = false;
    if (same && !lambda.is_zero()) r.cond3 = true;
  }
  return r;
}

DirectSumReport qa_directsum_check(const Mat& a1, const Mat& a2, std::uint64_t sample, Rng& rng,
                                   std::uint64_t bound) {
  if (!(a1.field() == a2.field())) raise(ErrorCode::DescriptorMismatch, "blocks over different fields");
  if (!a1.is_square() || !a2.is_square()) raise(ErrorCode::NotSquare, "direct-sum blocks must be square");
  const Field f = a1.field();
  const std::size_t n1 = a1.rows(), n2 = a2.rows(), n = n1 + n2;
  const Mat a = direct_sum(a1, a2);
  const Mat ad = commutator_operator(a), ad1 = commutator_operator(a1), ad2 = commutator_operator(a2);

  DirectSumReport out;
  out.coprime_charpolys = gcd(charpoly(a1), charpoly(a2)).is_one();

  auto check_pair = [&](const Mat& v, const Mat& phi) {
    ++out.pairs;
    const Triple whole(a, v, phi);
    const Triple t1(a1, v.block(0, 0, n1, 1), phi.block(0, 0, 1, n1));
    const Triple t2(a2, v.block(n1, 0, n2, 1), phi.block(0, n1, 1, n2));
    const bool joint = in_QA(whole, ad).member;
    const bool blockwise = in_QA(t1, ad1).member && in_QA(t2, ad2).member;
    if (joint) ++out.joint_members;
    if (blockwise) ++out.blockwise_members;
    bool bad = false;
    if (joint && !blockwise) {
      ++out.forward_violations;
      bad = true;
    }
    if (blockwise && !joint) {
      // v1 (x) phi2 and v2 (x) phi1 vanish.
      const bool cross_zero = (t1.v.is_zero() || t2.phi.is_zero()) && (t2.v.is_zero() || t1.phi.is_zero());
      if (out.coprime_charpolys || cross_zero) {
        ++out.converse_violations;
        bad = true;
      } else {
        ++out.converse_shared_spectrum_gaps;
      }
    }
    if (joint && !in_RA(whole).member) {
      ++out.qa_not_ra;
      bad = true;
    }
    if (bad && !out.counterexample) out.counterexample = whole;
  };

  const auto exhaustive = f.is_finite() ? bounded_power(f.order(), 2 * n, bound) : std::nullopt;
  if (exhaustive) {
    const std::uint64_t vectors = *bounded_power(f.order(), n, bound);
    for (std::uint64_t vi = 0; vi < vectors; ++vi) {
      const Mat v = matrix_from_index(f, n, 1, vi);
      for (std::uint64_t pi = 0; pi < vectors; ++pi) check_pair(v, matrix_from_index(f, 1, n, pi));
    }
  } else {
    for (std::uint64_t trial = 0; trial < sample; ++trial) {
      Mat v(f, n, 1), phi(f, 1, n);
      // Per block: zero v, zero phi, or both random, so blockwise members are common.
      auto fill = [&](std::size_t off, std::size_t len) {
        const auto mode = rng.below(3);
        for (std::size_t i = 0; i < len; ++i) {
          if (mode != 0) phi(0, off + i) = rng.element(f);
          if (mode != 1) v(off + i, 0) = rng.element(f);
        }
      };
      fill(0, n1);
      fill(n1, n2);
      check_pair(v, phi);
    }
  }
  out.holds = out.forward_violations == 0 && out.converse_violations == 0 && out.qa_not_ra == 0;
  return out;
}

}  // namespace frobkit
