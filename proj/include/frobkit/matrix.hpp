#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frobkit/field.hpp"

namespace frobkit {

/// Dense row-major matrix over one field. Column vectors (elements of V)
/// are n x 1 matrices and row functionals (elements of V*) are 1 x n.
/// 0 x 0 matrices are legal.
class Mat {
 public:
  Mat(Field f, std::size_t rows, std::size_t cols);
  Mat(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Mat identity(Field f, std::size_t n);
  static Mat from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& entries);
  static Mat diag(const std::vector<Elem>& d, Field f);
  /// e_i as an n x 1 column.
  static Mat unit_col(Field f, std::size_t n, std::size_t i);
  /// e_i^* as a 1 x n row.
  static Mat unit_row(Field f, std::size_t n, std::size_t i);
  /// E_{ij} (zero-based indices).
  static Mat unit(Field f, std::size_t n, std::size_t i, std::size_t j);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;

  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Elem>& entries() const noexcept { return a_; }

  Mat transpose() const;
  Mat col(std::size_t j) const;
  Mat row(std::size_t i) const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);

  Mat operator-() const;
  Mat& operator+=(const Mat& b);
  Mat& operator-=(const Mat& b);
  Mat& operator*=(const Elem& s);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Elem& s) { return a *= s; }
  friend Mat operator*(const Elem& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// The scalar of a 1 x 1 matrix.
  const Elem& scalar() const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

/// v (x) phi, the rank-one operator u -> phi(u) v.
Mat outer(const Mat& v, const Mat& phi);
/// [a, b] = ab - ba.
Mat commutator(const Mat& a, const Mat& b);
Mat direct_sum(const Mat& a, const Mat& b);
Mat block_diag(const std::vector<Mat>& blocks, Field f);
/// Columns placed side by side.
Mat hconcat(const std::vector<Mat>& cols, Field f, std::size_t rows);
Mat vconcat(const std::vector<Mat>& rows, Field f, std::size_t cols);
Mat power(const Mat& a, std::uint64_t e);

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};
Rref rref(Mat a);
std::size_t rank(const Mat& a);

struct SolveResult {
  bool consistent = false;
  std::optional<Mat> solution;  // one particular solution x with a x = b
  std::vector<Mat> kernel;      // basis of ker(a), each a column
  std::size_t rank = 0;
};
/// Solve a x = b; b may have several columns.
SolveResult solve_linear(const Mat& a, const Mat& b);
/// Basis of ker(a) as columns.
std::vector<Mat> kernel_basis(const Mat& a);
/// Basis of the column space (as columns, taken from a's own columns).
std::vector<Mat> column_basis(const Mat& a);

Elem det(const Mat& a);
bool is_invertible(const Mat& a);
Mat inverse(const Mat& a);

/// vec(B) uses row-major order: index i*n + j holds B(i, j).
Mat vec(const Mat& b);
Mat unvec(const Mat& x, std::size_t rows, std::size_t cols);

}  // namespace frobkit
