#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "frobkit/field.hpp"

namespace frobkit {

/// Degree reported for the zero polynomial.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial over one field, coefficients low-to-high,
/// never with trailing zeros.
class Poly {
 public:
  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, std::vector<Elem> coeffs);

  static Poly constant(const Elem& c);
  static Poly monomial(const Elem& c, std::size_t degree);
  static Poly x(Field f) { return monomial(f.one(), 1); }
  /// Convenience for tests and literals: integer coefficients, low-to-high.
  static Poly from_ints(Field f, const std::vector<std::int64_t>& coeffs);

  Field field() const noexcept { return field_; }
  int degree() const noexcept {
    return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1;
  }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  /// Coefficient of x^i (zero beyond the degree).
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  Elem leading() const;

  Poly monic() const;
  Poly derivative() const;
  Elem operator()(const Elem& at) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& b);
  Poly& operator-=(const Poly& b);
  Poly& operator*=(const Poly& b);
  Poly& operator*=(const Elem& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Elem& s) { return a *= s; }
  friend Poly operator*(const Elem& s, Poly a) { return a *= s; }
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  Poly pow(std::uint64_t e) const;

  /// Lexicographic order: degree first, then coefficients from the top.
  int compare(const Poly& b) const;

  /// Human readable form, e.g. "x^3-3x^2+3x-1" or "x^2+2".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  Field field_;
  std::vector<Elem> c_;
};

/// Quotient and remainder with a = q*b + r, deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
struct XgcdResult {
  Poly g, s, t;  // g = s*a + t*b, g monic
};
XgcdResult xgcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
/// a^e mod m with an arbitrary-precision exponent.
Poly pow_mod(const Poly& a, const mpz_class& e, const Poly& m);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& m);

/// Reduced quotient num/den with monic denominator.
class RationalFunction {
 public:
  explicit RationalFunction(Poly num);
  RationalFunction(Poly num, Poly den);

  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }
  Field field() const noexcept { return num_.field(); }

  RationalFunction inverse() const;
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly num_, den_;
};

/// Descriptor-tagged polynomial text: "Fq p=3 k=1 | 2,0,1" is x^2+2.
std::string to_text(const Poly& f);
Poly parse_poly(const std::string& text);
/// "Fq p=3 k=2" / "Q" back to a field (extensions use the default modulus).
Field parse_field_tag(const std::string& tag);

}  // namespace frobkit
