#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobkit/matrix.hpp"
#include "frobkit/poly.hpp"

namespace frobkit {

/// Companion matrix of a monic f: ones on the subdiagonal, -a_0..-a_{n-1}
/// down the last column, zero elsewhere. Degree 0 gives the 0 x 0 matrix.
Mat companion(const Poly& f);

/// Non-unit diagonal of the Smith normal form of xI - A over F[x], in
/// divisibility order. The last one is the minimal polynomial and the
/// product is the characteristic polynomial.
std::vector<Poly> smith_invariant_factors(const Mat& a);

struct FrobeniusForm {
  std::vector<Poly> invariant_factors;  // f_1 | f_2 | ... | f_r
  Mat transform;                        // g with g A g^{-1} = form()
  Mat form() const;
};

/// Rational canonical form. Invariant factors come from the Smith form; the
/// transform is built by spinning one cyclic vector per block. The result is
/// verified by multiplication before it is returned.
FrobeniusForm frobenius_form(const Mat& a);

struct ElementaryBlock {
  Poly f;      // monic irreducible
  unsigned s;  // exponent >= 1
  Poly power() const { return f.pow(s); }
};

struct ElementaryDivisorForm {
  /// Sorted by f (degree; linear factors x - r by r, others by coefficients
  /// from the top), then s.
  std::vector<ElementaryBlock> blocks;
  Mat transform;  // g A g^{-1} = form()
  Mat form() const;
};

/// Splits every invariant factor into prime powers. Odd finite fields only.
ElementaryDivisorForm elementary_divisor_form(const Mat& a);

/// An invertible g with g A^t g^{-1} = A.
Mat transpose_conjugator(const Mat& a);

/// The n^2 x n^2 matrix of B -> [A, B] acting on vec(B) (row-major).
Mat commutator_operator(const Mat& a);
/// dim ker(ad_A), computed by row reduction of `commutator_operator`.
std::size_t centralizer_dimension(const Mat& a);
/// sum over pairs of invariant factors of min(deg f_i, deg f_j).
std::size_t centralizer_dimension_from_invariants(const std::vector<Poly>& factors);
/// n^2 - centralizer_dimension(A).
std::size_t orbit_dimension(const Mat& a);

/// |GL_n(F_q)|.
mpz_class general_linear_order(std::uint64_t q, std::size_t n);

/// Every invariant-factor chain f_1 | ... | f_r with product g (monic, odd q).
std::vector<std::vector<Poly>> similarity_classes_with_charpoly(const Poly& g);

struct ClassRow {
  std::vector<Poly> invariant_factors;
  Mat representative;
  std::size_t centralizer_dim = 0;
  std::size_t centralizer_dim_formula = 0;
  std::size_t orbit_dim = 0;
  std::optional<mpz_class> class_size;
  std::string size_method;  // "census", "centralizer", or "none"
};

struct OrbitStats {
  Poly charpoly;
  std::size_t n = 0;
  std::vector<ClassRow> classes;
  /// |{A : charpoly(A) = g}| by direct enumeration, when that fits the bound.
  std::optional<mpz_class> fiber_size;
  bool exact = false;  // every class has a size
};

/// Similarity classes inside the fiber of g. Class sizes come from a full
/// census of gl_n(F_q) when q^{n^2} <= bound, otherwise from |GL_n| divided by
/// the unit count of the centralizer algebra when q^{dim} <= bound.
OrbitStats orbit_stats(const Poly& g, std::uint64_t exact_bound);

}  // namespace frobkit
