#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace frobkit {

namespace detail {
struct FieldData;
}

class Elem;

enum class FieldKind { Prime, Extension, Rational };

/// Handle to an interned field descriptor.
///
/// Descriptors live for the whole process and are never mutated after
/// construction, so handles are trivially copyable and comparable by
/// identity. Extension fields F_{p^k} are F_p[u]/(m(u)) for a stored monic
/// irreducible m; `finite(p, k)` picks the first irreducible m in the
/// enumeration order of its coefficient vector (constant term least
/// significant), which gives u^2+1 for F_9 and u^2+2 for F_25.
class Field {
 public:
  static Field prime(std::uint64_t p);
  static Field finite(std::uint64_t p, unsigned k);
  /// F_q for a prime power q, using the default modulus.
  static Field finite_order(std::uint64_t q);
  /// F_p[u]/(modulus); `modulus` is monic, low-to-high, and must be irreducible.
  static Field extension(std::uint64_t p, std::vector<std::uint32_t> modulus);
  static Field rationals();

  FieldKind kind() const noexcept;
  std::uint64_t characteristic() const noexcept;
  /// Degree over the prime field; 1 for prime fields and Q.
  unsigned degree() const noexcept;
  /// Number of elements; 0 for Q.
  std::uint64_t order() const noexcept;
  bool is_finite() const noexcept { return kind() != FieldKind::Rational; }
  /// Modulus coefficients (low-to-high, monic) for extension fields, empty otherwise.
  const std::vector<std::uint32_t>& modulus() const noexcept;
  /// Descriptor tag used by the text formats: "Fq p=3 k=2" or "Q".
  std::string tag() const;

  Elem zero() const;
  Elem one() const;
  Elem from_int(std::int64_t value) const;
  /// Finite fields only: the element with canonical index `index` < q.
  Elem element(std::uint64_t index) const;
  /// The generator u of an extension field (x for prime fields).
  Elem generator() const;
  Elem from_rational(const mpq_class& value) const;
  /// Parse the canonical text of an element ("2", "-3/4", extension index).
  Elem parse(const std::string& text) const;

  const detail::FieldData* data() const noexcept { return data_; }

  friend bool operator==(Field a, Field b) noexcept { return a.data_ == b.data_; }

 private:
  explicit Field(const detail::FieldData* d) : data_(d) {}
  friend class Elem;
  const detail::FieldData* data_;
};

/// Element of a `Field` in canonical form.
///
/// Finite field elements are stored as an index in [0, q): the residue for
/// prime fields, sum c_i p^i over the coordinates c_i in the basis 1,u,...
/// for extensions. Rationals are reduced fractions with positive denominator.
class Elem {
 public:
  Field field() const noexcept { return Field(f_); }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  std::uint32_t index() const;
  const mpq_class& rational() const;

  Elem operator-() const;
  Elem inv() const;
  Elem pow(std::int64_t e) const;
  Elem pow(const mpz_class& e) const;

  Elem& operator+=(const Elem& b);
  Elem& operator-=(const Elem& b);
  Elem& operator*=(const Elem& b);
  Elem& operator/=(const Elem& b);

  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(Elem a, const Elem& b) { return a *= b; }
  friend Elem operator/(Elem a, const Elem& b) { return a /= b; }

  friend bool operator==(const Elem& a, const Elem& b);
  /// Total order on one field: by index for finite fields, numerically for Q.
  int compare(const Elem& b) const;

  std::string to_string() const;

 private:
  friend class Field;
  Elem(const detail::FieldData* f, std::uint32_t r) : f_(f), v_(r) {}
  Elem(const detail::FieldData* f, mpq_class q) : f_(f), v_(std::move(q)) {}
  void check_same(const Elem& b) const;

  const detail::FieldData* f_;
  std::variant<std::uint32_t, mpq_class> v_;
};

std::ostream& operator<<(std::ostream& os, const Elem& e);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace frobkit
