#include "frobkit/charpoly.hpp"

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

void require_square(const Mat& a, const char* what) {
  if (!a.is_square())
    raise(ErrorCode::NotSquare, std::string(what) + " of a " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " matrix");
}

}  // namespace

Poly charpoly(const Mat& a) {
  require_square(a, "charpoly");
  const Field f = a.field();
  const std::size_t n = a.rows();
  Mat h = a;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const Elem tinv = h(m, m - 1).inv();
    for (std::size_t r = m + 1; r < n; ++r) {
      if (h(r, m - 1).is_zero()) continue;
      const Elem u = h(r, m - 1) * tinv;
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= u * h(m, j);
      for (std::size_t j = 0; j < n; ++j) h(j, m) += u * h(j, r);
    }
  }
  // p[m] = det(xI - H[0..m, 0..m])
  const Poly x = Poly::x(f);
  std::vector<Poly> p{Poly::constant(f.one())};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly pm = (x - Poly::constant(h(m - 1, m - 1))) * p[m - 1];
    Elem t = f.one();
    for (std::size_t i = 1; i < m; ++i) {
      t *= h(m - i, m - i - 1);
      if (t.is_zero()) break;
      pm -= (t * h(m - i - 1, m - 1)) * p[m - i - 1];
    }
    p.push_back(std::move(pm));
  }
  return p[n];
}

Poly charpoly_berkowitz(const Mat& a) {
  require_square(a, "charpoly_berkowitz");
  const Field f = a.field();
  const std::size_t n = a.rows();
  // Coefficients of det(xI - A_r), highest degree first.
  std::vector<Elem> p{f.one()};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Elem> c(r + 2, f.zero());
    c[0] = f.one();
    c[1] = -a(r, r);
    std::vector<Elem> w(r, f.zero());
    for (std::size_t i = 0; i < r; ++i) w[i] = a(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      Elem s = f.zero();
      for (std::size_t j = 0; j < r; ++j) s += a(r, j) * w[j];
      c[k] = -s;
      if (k == r + 1) break;
      std::vector<Elem> next(r, f.zero());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += a(i, j) * w[j];
      w = std::move(next);
    }
    std::vector<Elem> q(r + 2, f.zero());
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) q[i] += c[i - j] * p[j];
    p = std::move(q);
  }
  std::vector<Elem> low(p.rbegin(), p.rend());
  return Poly(f, std::move(low));
}

std::vector<Elem> minor_sums_from_charpoly(const Poly& p) {
  const int n = p.degree();
  if (n < 0 || !p.is_monic()) raise(ErrorCode::NotMonic, "characteristic polynomial must be monic");
  std::vector<Elem> c;
  for (int k = 0; k <= n; ++k) {
    Elem e = p.coeff(static_cast<std::size_t>(n - k));
    c.push_back(k % 2 ? -e : e);
  }
  return c;
}

Poly charpoly_from_minor_sums(const std::vector<Elem>& c, Field f) {
  if (c.empty()) raise(ErrorCode::LengthMismatch, "empty minor-sum sequence");
  const std::size_t n = c.size() - 1;
  std::vector<Elem> coeffs(n + 1, f.zero());
  for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = k % 2 ? -c[k] : c[k];
  return Poly(f, std::move(coeffs));
}

std::vector<Elem> principal_minor_sums_bruteforce(const Mat& a) {
  require_square(a, "principal_minor_sums");
  const std::size_t n = a.rows();
  if (n > kMinorSumBruteForceCap)
    raise(ErrorCode::InvalidArgument, "subset enumeration is capped at n = 8");
  const Field f = a.field();
  std::vector<Elem> c(n + 1, f.zero());
  c[0] = f.one();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    Mat sub(f, idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = a(idx[i], idx[j]);
    c[idx.size()] += det(sub);
  }
  return c;
}

std::vector<Elem> principal_minor_sums(const Mat& a) {
  require_square(a, "principal_minor_sums");
  if (a.rows() <= kMinorSumBruteForceCap) return principal_minor_sums_bruteforce(a);
  return minor_sums_from_charpoly(charpoly(a));
}

Poly minimal_polynomial(const Mat& a) {
  require_square(a, "minimal_polynomial");
  const Field f = a.field();
  const std::size_t n = a.rows();
  std::vector<Mat> cols;
  Mat pw = Mat::identity(f, n);
  for (std::size_t d = 0; d <= n; ++d) {
    const Mat target = vec(pw);
    const Mat basis = hconcat(cols, f, n * n);
    const SolveResult s = solve_linear(basis, target);
    if (s.consistent) {
      std::vector<Elem> coeffs(d + 1, f.zero());
      for (std::size_t i = 0; i < d; ++i) coeffs[i] = -(*s.solution)(i, 0);
      coeffs[d] = f.one();
      return Poly(f, std::move(coeffs));
    }
    cols.push_back(target);
    pw = pw * a;
  }
  raise(ErrorCode::AlgorithmDisagreement, "no annihilator of degree <= n found");
}

Mat poly_at_matrix(const Poly& p, const Mat& a) {
  require_square(a, "poly_at_matrix");
  const Field f = a.field();
  Mat r(f, a.rows(), a.rows());
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    r = r * a;
    for (std::size_t j = 0; j < a.rows(); ++j) r(j, j) += c[i];
  }
  return r;
}

Mat poly_at_matrix(const RationalFunction& fn, const Mat& a) {
  require_square(a, "poly_at_matrix");
  if (!gcd(fn.denominator(), charpoly(a)).is_one())
    raise(ErrorCode::NonInvertibleDenominator, "denominator shares a factor with the characteristic polynomial");
  return poly_at_matrix(fn.numerator(), a) * inverse(poly_at_matrix(fn.denominator(), a));
}

}  // namespace frobkit
