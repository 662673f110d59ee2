#include "frobkit/matrix.hpp"

#include <sstream>

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

void same_field(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field())) raise(ErrorCode::DescriptorMismatch, "matrices over different fields");
}

std::string shape(const Mat& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }

}  // namespace

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

Mat::Mat(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(f), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) raise(ErrorCode::ShapeMismatch, "entry count does not match shape");
  for (const auto& e : a_)
    if (!(e.field() == f)) raise(ErrorCode::DescriptorMismatch, "entry from another field");
}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Mat Mat::from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& entries) {
  std::vector<Elem> e;
  e.reserve(entries.size());
  for (auto v : entries) e.push_back(f.from_int(v));
  return Mat(f, rows, cols, std::move(e));
}

Mat Mat::diag(const std::vector<Elem>& d, Field f) {
  Mat m(f, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::unit_col(Field f, std::size_t n, std::size_t i) {
  Mat m(f, n, 1);
  m(i, 0) = f.one();
  return m;
}

Mat Mat::unit_row(Field f, std::size_t n, std::size_t i) {
  Mat m(f, 1, n);
  m(0, i) = f.one();
  return m;
}

Mat Mat::unit(Field f, std::size_t n, std::size_t i, std::size_t j) {
  Mat m(f, n, n);
  m(i, j) = f.one();
  return m;
}

bool Mat::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::col(std::size_t j) const { return block(0, j, rows_, 1); }
Mat Mat::row(std::size_t i) const { return block(i, 0, 1, cols_); }

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) raise(ErrorCode::ShapeMismatch, "block out of range");
  Mat b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  same_field(*this, b);
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) raise(ErrorCode::ShapeMismatch, "block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& e : r.a_) e = -e;
  return r;
}

Mat& Mat::operator+=(const Mat& b) {
  same_field(*this, b);
  if (rows_ != b.rows_ || cols_ != b.cols_) raise(ErrorCode::ShapeMismatch, shape(*this) + " + " + shape(b));
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += b.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& b) {
  same_field(*this, b);
  if (rows_ != b.rows_ || cols_ != b.cols_) raise(ErrorCode::ShapeMismatch, shape(*this) + " - " + shape(b));
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= b.a_[i];
  return *this;
}

Mat& Mat::operator*=(const Elem& s) {
  for (auto& e : a_) e *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  same_field(a, b);
  if (a.cols_ != b.rows_) raise(ErrorCode::ShapeMismatch, shape(a) + " * " + shape(b));
  Mat r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Elem& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

const Elem& Mat::scalar() const {
  if (rows_ != 1 || cols_ != 1) raise(ErrorCode::ShapeMismatch, "scalar() of a " + shape(*this) + " matrix");
  return a_[0];
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

Mat outer(const Mat& v, const Mat& phi) {
  if (v.cols() != 1 || phi.rows() != 1 || v.rows() != phi.cols())
    raise(ErrorCode::ShapeMismatch, "outer product needs n x 1 and 1 x n, got " + shape(v) + " and " + shape(phi));
  return v * phi;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat direct_sum(const Mat& a, const Mat& b) { return block_diag({a, b}, a.field()); }

Mat block_diag(const std::vector<Mat>& blocks, Field f) {
  std::size_t n = 0, m = 0;
  for (const auto& b : blocks) {
    n += b.rows();
    m += b.cols();
  }
  Mat r(f, n, m);
  std::size_t i = 0, j = 0;
  for (const auto& b : blocks) {
    r.set_block(i, j, b);
    i += b.rows();
    j += b.cols();
  }
  return r;
}

Mat hconcat(const std::vector<Mat>& cols, Field f, std::size_t rows) {
  std::size_t m = 0;
  for (const auto& c : cols) m += c.cols();
  Mat r(f, rows, m);
  std::size_t j = 0;
  for (const auto& c : cols) {
    r.set_block(0, j, c);
    j += c.cols();
  }
  return r;
}

Mat vconcat(const std::vector<Mat>& rows, Field f, std::size_t cols) {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.rows();
  Mat out(f, n, cols);
  std::size_t i = 0;
  for (const auto& r : rows) {
    out.set_block(i, 0, r);
    i += r.rows();
  }
  return out;
}

Mat power(const Mat& a, std::uint64_t e) {
  if (!a.is_square()) raise(ErrorCode::NotSquare, "power of a non-square matrix");
  Mat r = Mat::identity(a.field(), a.rows()), base = a;
  for (; e; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

Rref rref(Mat a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Elem inv = a(r, c).inv();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Elem t = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= t * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Mat& a) { return rref(a).pivots.size(); }

std::vector<Mat> kernel_basis(const Mat& a) {
  const Rref r = rref(a);
  const Field f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Mat> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Mat v(f, a.cols(), 1);
    v(free, 0) = f.one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v(r.pivots[i], 0) = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Mat> column_basis(const Mat& a) {
  std::vector<Mat> basis;
  for (auto c : rref(a).pivots) basis.push_back(a.col(c));
  return basis;
}

SolveResult solve_linear(const Mat& a, const Mat& b) {
  same_field(a, b);
  if (a.rows() != b.rows()) raise(ErrorCode::ShapeMismatch, "solve: " + shape(a) + " vs " + shape(b));
  const Field f = a.field();
  Mat aug(f, a.rows(), a.cols() + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, a.cols(), b);
  const Rref r = rref(std::move(aug));
  SolveResult out;
  out.kernel = kernel_basis(a);
  out.rank = a.cols() - out.kernel.size();
  for (auto c : r.pivots) {
    if (c >= a.cols()) return out;  // pivot in the augmented part
  }
  out.consistent = true;
  Mat x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, a.cols() + j);
  out.solution = std::move(x);
  return out;
}

Elem det(const Mat& a) {
  if (!a.is_square()) raise(ErrorCode::NotSquare, "determinant of a " + shape(a) + " matrix");
  Mat m = a;
  const Field f = a.field();
  Elem d = f.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return f.zero();
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    const Elem inv = m(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Elem t = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= t * m(c, j);
    }
  }
  return d;
}

bool is_invertible(const Mat& a) { return a.is_square() && rank(a) == a.rows(); }

Mat inverse(const Mat& a) {
  if (!a.is_square()) raise(ErrorCode::NotSquare, "inverse of a " + shape(a) + " matrix");
  const std::size_t n = a.rows();
  const Field f = a.field();
  Mat aug(f, n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Mat::identity(f, n));
  const Rref r = rref(std::move(aug));
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1))
    raise(ErrorCode::NotInvertible, "matrix is singular");
  return r.reduced.block(0, n, n, n);
}

Mat vec(const Mat& b) { return Mat(b.field(), b.rows() * b.cols(), 1, b.entries()); }

Mat unvec(const Mat& x, std::size_t rows, std::size_t cols) {
  if (x.cols() != 1 || x.rows() != rows * cols) raise(ErrorCode::ShapeMismatch, "unvec size mismatch");
  return Mat(x.field(), rows, cols, x.entries());
}

}  // namespace frobkit
