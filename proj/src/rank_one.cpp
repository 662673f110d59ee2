#include "frobkit/rank_one.hpp"

#include "frobkit/charpoly.hpp"
#include "frobkit/error.hpp"

namespace frobkit {

bool MomentSequence::all_zero() const {
  for (const auto& e : m)
    if (!e.is_zero()) return false;
  return true;
}

MomentSequence moments(const Mat& a, const Mat& v, const Mat& phi, std::size_t length) {
  const std::size_t n = a.rows();
  if (!a.is_square() || v.rows() != n || v.cols() != 1 || phi.rows() != 1 || phi.cols() != n)
    raise(ErrorCode::ShapeMismatch, "moments need shapes n x n, n x 1, 1 x n");
  const Field f = a.field();
  MomentSequence out;
  out.m.reserve(length);
  std::vector<Elem> w(v.entries());
  std::vector<Elem> next(n, f.zero());
  for (std::size_t j = 0; j < length; ++j) {
    Elem s = f.zero();
    for (std::size_t i = 0; i < n; ++i) s += phi(0, i) * w[i];
    out.m.push_back(std::move(s));
    if (j + 1 == length) break;
    for (std::size_t i = 0; i < n; ++i) {
      Elem acc = f.zero();
      for (std::size_t k = 0; k < n; ++k)
        if (!w[k].is_zero()) acc += a(i, k) * w[k];
      next[i] = std::move(acc);
    }
    std::swap(w, next);
  }
  return out;
}

MomentSequence moments(const Triple& t, std::size_t length) { return moments(t.A, t.v, t.phi, length); }

std::vector<Elem> ck_update(const std::vector<Elem>& c, const MomentSequence& m, const Elem& lambda) {
  if (c.empty()) raise(ErrorCode::LengthMismatch, "empty coefficient sequence");
  if (!c[0].is_one()) raise(ErrorCode::InvalidArgument, "c_0 must be 1");
  const std::size_t n = c.size() - 1;
  if (m.length() < n)
    raise(ErrorCode::LengthMismatch,
          "need " + std::to_string(n) + " moments, got " + std::to_string(m.length()));
  const Field f = lambda.field();
  std::vector<Elem> out = c;
  if (lambda.is_zero()) return out;
  for (std::size_t k = 1; k <= n; ++k) {
    Elem s = f.zero();
    for (std::size_t j = 0; j < k; ++j) {
      const Elem term = c[k - 1 - j] * m.m[j];
      if (j % 2) s -= term; else s += term;
    }
    out[k] += lambda * s;
  }
  return out;
}

std::vector<Mat> faddeev_chain(const Mat& a) {
  if (!a.is_square()) raise(ErrorCode::NotSquare, "faddeev_chain of a non-square matrix");
  const std::size_t n = a.rows();
  const Field f = a.field();
  const auto c = minor_sums_from_charpoly(charpoly(a));
  std::vector<Mat> chain{Mat::identity(f, n)};
  for (std::size_t k = 2; k <= n + 1; ++k) {
    Mat next = -(a * chain.back());
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[k - 1];
    chain.push_back(std::move(next));
  }
  return chain;
}

Triple nu_lambda(const Triple& t, const Elem& lambda) {
  return Triple(t.A + lambda * outer(t.v, t.phi), t.v, t.phi);
}

NormalizerResult entry_normalizer_search(const Mat& m) {
  if (!m.is_square()) raise(ErrorCode::NotSquare, "entry_normalizer_search of a non-square matrix");
  const std::size_t n = m.rows();
  const Field f = m.field();
  NormalizerResult out;
  if (m.is_zero()) {
    out.is_zero = true;
    return out;
  }
  // A pair with phi v != 0 and phi M v != 0: a nonzero diagonal entry gives
  // (e_i, e_i^*); otherwise M_ij != 0 with zero diagonal gives (e_i + e_j, e_i^*).
  std::size_t bi = n, bj = n;
  for (std::size_t i = 0; i < n && bi == n; ++i)
    if (!m(i, i).is_zero()) bi = bj = i;
  for (std::size_t i = 0; i < n && bi == n; ++i)
    for (std::size_t j = 0; j < n && bi == n; ++j)
      if (!m(i, j).is_zero()) {
        bi = i;
        bj = j;
      }
  Mat v = Mat::unit_col(f, n, bj);
  if (bi != bj) v(bi, 0) += f.one();
  Mat phi = Mat::unit_row(f, n, bi);

  std::vector<Mat> cols{v};
  for (auto& k : kernel_basis(phi)) cols.push_back(std::move(k));
  const Mat binv = hconcat(cols, f, n);
  Mat b = inverse(binv);
  const Mat conj = b * m * binv;
  if (conj(0, 0).is_zero())
    raise(ErrorCode::AlgorithmDisagreement, "normalizer produced a zero corner");
  out.B = std::move(b);
  out.v = std::move(v);
  out.phi = std::move(phi);
  return out;
}

}  // namespace frobkit
