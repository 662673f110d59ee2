#include "frobkit/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "frobkit/error.hpp"

namespace frobkit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::NotFiniteField: return "NotFiniteField";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case ErrorCode::EvenCharacteristicUnsupported: return "EvenCharacteristicUnsupported";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorCode::TooLargeForExactCount: return "TooLargeForExactCount";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::AlgorithmDisagreement: return "AlgorithmDisagreement";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;
constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 16;
constexpr std::uint64_t kAddTableLimit = 256;

using RawPoly = std::vector<std::uint64_t>;

void raw_trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t raw_inv(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

RawPoly raw_mod(RawPoly a, const RawPoly& m, std::uint64_t p) {
  raw_trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t linv = raw_inv(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * linv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    raw_trim(a);
  }
  return a;
}

RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  RawPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return raw_mod(std::move(r), m, p);
}

RawPoly raw_gcd(RawPoly a, RawPoly b, std::uint64_t p) {
  raw_trim(a);
  raw_trim(b);
  while (!b.empty()) {
    a = raw_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// m (monic, degree k) is irreducible over F_p iff gcd(x^{p^i} - x, m) = 1 for
// every i <= k/2.
bool raw_irreducible(const RawPoly& m, std::uint64_t p) {
  const std::size_t k = m.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  RawPoly x{0, 1};
  RawPoly h = raw_mod(x, m, p);
  for (std::size_t i = 1; i <= k / 2; ++i) {
    RawPoly base = h, acc{1};
    for (std::uint64_t e = p; e; e >>= 1) {
      if (e & 1) acc = raw_mulmod(acc, base, m, p);
      base = raw_mulmod(base, base, m, p);
    }
    h = acc;
    RawPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    raw_trim(diff);
    RawPoly g = raw_gcd(diff, m, p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace

namespace detail {

struct FieldData {
  FieldKind kind;
  std::uint64_t p = 0;
  unsigned k = 1;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> exp;
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> add_table;

  RawPoly digits(std::uint32_t a) const {
    RawPoly d(k, 0);
    for (unsigned i = 0; i < k; ++i) {
      d[i] = a % p;
      a = static_cast<std::uint32_t>(a / p);
    }
    return d;
  }
  std::uint32_t encode(const RawPoly& d) const {
    std::uint64_t r = 0;
    for (std::size_t i = d.size(); i-- > 0;) r = r * p + d[i];
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (kind == FieldKind::Prime) {
      const std::uint64_t s = std::uint64_t{a} + b;
      return static_cast<std::uint32_t>(s >= p ? s - p : s);
    }
    if (!add_table.empty()) return add_table[std::size_t{a} * q + b];
    std::uint64_t r = 0, scale = 1;
    while (a || b) {
      r += ((a % p + b % p) % p) * scale;
      a = static_cast<std::uint32_t>(a / p);
      b = static_cast<std::uint32_t>(b / p);
      scale *= p;
    }
    return static_cast<std::uint32_t>(r);
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (kind == FieldKind::Prime) return a == 0 ? 0 : static_cast<std::uint32_t>(p - a);
    std::uint64_t r = 0, scale = 1;
    while (a) {
      const std::uint64_t d = a % p;
      r += (d == 0 ? 0 : p - d) * scale;
      a = static_cast<std::uint32_t>(a / p);
      scale *= p;
    }
    return static_cast<std::uint32_t>(r);
  }
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    RawPoly m(modulus.begin(), modulus.end());
    RawPoly r = raw_mulmod(digits(a), digits(b), m, p);
    r.resize(k, 0);
    return encode(r);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (kind == FieldKind::Prime) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    if (a == 0 || b == 0) return 0;
    if (!log.empty()) {
      std::uint64_t e = std::uint64_t{log[a]} + log[b];
      if (e >= q - 1) e -= q - 1;
      return exp[e];
    }
    return slow_mul(a, b);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) raise(ErrorCode::DivisionByZero, "inverse of zero");
    if (!log.empty()) return exp[(q - 1 - log[a]) % (q - 1)];
    return pow(a, q - 2);
  }

  void build_tables() {
    if (kind != FieldKind::Extension) return;
    if (q <= kAddTableLimit) {
      add_table.assign(q * q, 0);
      std::vector<std::uint32_t> saved;
      saved.swap(add_table);
      for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) saved[std::size_t{a} * q + b] = add(a, b);
      add_table.swap(saved);
    }
    if (q > kLogTableLimit) return;
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t m = q - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        prime_factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) prime_factors.push_back(m);
    std::uint32_t g = 0;
    for (std::uint32_t cand = 2; cand < q && g == 0; ++cand) {
      bool primitive = true;
      for (auto r : prime_factors) {
        if (pow(cand, (q - 1) / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) g = cand;
    }
    std::vector<std::uint32_t> e(q - 1), l(q, 0);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
      e[i] = x;
      l[x] = static_cast<std::uint32_t>(i);
      x = slow_mul(x, g);
    }
    exp = std::move(e);
    log = std::move(l);
  }
};

}  // namespace detail

namespace {

detail::FieldData make_rationals() {
  detail::FieldData d;
  d.kind = FieldKind::Rational;
  return d;
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<std::uint64_t, std::vector<std::uint32_t>>,
           std::unique_ptr<detail::FieldData>>
      finite;
  std::map<std::pair<std::uint64_t, unsigned>, const detail::FieldData*> defaults;
  detail::FieldData rationals = make_rationals();
};

Registry& registry() {
  static Registry r;
  return r;
}

const detail::FieldData* intern(std::uint64_t p, std::vector<std::uint32_t> modulus) {
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto key = std::make_pair(p, modulus);
  auto it = reg.finite.find(key);
  if (it != reg.finite.end()) return it->second.get();
  auto d = std::make_unique<detail::FieldData>();
  if (modulus.empty()) {
    d->kind = FieldKind::Prime;
    d->k = 1;
    d->q = p;
  } else {
    d->kind = FieldKind::Extension;
    d->k = static_cast<unsigned>(modulus.size() - 1);
    d->q = 1;
    for (unsigned i = 0; i < d->k; ++i) d->q *= p;
  }
  d->p = p;
  d->modulus = std::move(modulus);
  d->build_tables();
  const auto* raw = d.get();
  reg.finite.emplace(std::move(key), std::move(d));
  return raw;
}

void check_order(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) raise(ErrorCode::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) raise(ErrorCode::InvalidArgument, "extension degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q >= kMaxOrder) raise(ErrorCode::InvalidArgument, "field order exceeds 2^31");
  }
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  check_order(p, 1);
  return Field(intern(p, {}));
}

Field Field::finite(std::uint64_t p, unsigned k) {
  check_order(p, k);
  if (k == 1) return prime(p);
  {
    auto& reg = registry();
    std::lock_guard lock(reg.mu);
    auto it = reg.defaults.find({p, k});
    if (it != reg.defaults.end()) return Field(it->second);
  }
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    RawPoly m(k + 1, 0);
    std::uint64_t t = c;
    for (unsigned i = 0; i < k; ++i) {
      m[i] = t % p;
      t /= p;
    }
    m[k] = 1;
    if (!raw_irreducible(m, p)) continue;
    std::vector<std::uint32_t> mod(m.begin(), m.end());
    const auto* d = intern(p, std::move(mod));
    auto& reg = registry();
    std::lock_guard lock(reg.mu);
    reg.defaults.emplace(std::make_pair(p, k), d);
    return Field(d);
  }
  raise(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

Field Field::finite_order(std::uint64_t q) {
  if (q < 2) raise(ErrorCode::InvalidArgument, "field order must be at least 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned k = 0;
  std::uint64_t t = q;
  while (t % p == 0) {
    t /= p;
    ++k;
  }
  if (t != 1) raise(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
  return finite(p, k);
}

Field Field::extension(std::uint64_t p, std::vector<std::uint32_t> modulus) {
  if (modulus.size() < 2) raise(ErrorCode::InvalidArgument, "modulus must have degree >= 1");
  check_order(p, static_cast<unsigned>(modulus.size() - 1));
  for (auto c : modulus)
    if (c >= p) raise(ErrorCode::InvalidArgument, "modulus coefficient out of range");
  if (modulus.back() != 1) raise(ErrorCode::NotMonic, "extension modulus must be monic");
  if (modulus.size() == 2) return prime(p);
  RawPoly m(modulus.begin(), modulus.end());
  if (!raw_irreducible(m, p)) raise(ErrorCode::NotIrreducible, "extension modulus is reducible");
  return Field(intern(p, std::move(modulus)));
}

Field Field::rationals() { return Field(&registry().rationals); }

FieldKind Field::kind() const noexcept { return data_->kind; }
std::uint64_t Field::characteristic() const noexcept { return data_->p; }
unsigned Field::degree() const noexcept { return data_->k; }
std::uint64_t Field::order() const noexcept { return data_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return data_->modulus; }

std::string Field::tag() const {
  if (kind() == FieldKind::Rational) return "Q";
  std::string t = "Fq p=" + std::to_string(data_->p) + " k=" + std::to_string(data_->k);
  if (kind() == FieldKind::Extension && !(finite(data_->p, data_->k) == *this)) {
    t += " m=";
    for (std::size_t i = 0; i < data_->modulus.size(); ++i)
      t += (i ? "," : "") + std::to_string(data_->modulus[i]);
  }
  return t;
}

Elem Field::zero() const {
  if (kind() == FieldKind::Rational) return Elem(data_, mpq_class(0));
  return Elem(data_, std::uint32_t{0});
}

Elem Field::one() const {
  if (kind() == FieldKind::Rational) return Elem(data_, mpq_class(1));
  return Elem(data_, std::uint32_t{1});
}

Elem Field::from_int(std::int64_t value) const {
  if (kind() == FieldKind::Rational) return Elem(data_, mpq_class(mpz_class(std::to_string(value))));
  const auto p = static_cast<std::int64_t>(data_->p);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return Elem(data_, static_cast<std::uint32_t>(r));
}

Elem Field::element(std::uint64_t index) const {
  if (!is_finite()) raise(ErrorCode::NotFiniteField, "element(index) needs a finite field");
  if (index >= data_->q) raise(ErrorCode::InvalidArgument, "element index out of range");
  return Elem(data_, static_cast<std::uint32_t>(index));
}

Elem Field::generator() const {
  if (kind() == FieldKind::Extension) return Elem(data_, static_cast<std::uint32_t>(data_->p));
  raise(ErrorCode::InvalidArgument, "generator() is defined for extension fields only");
}

Elem Field::from_rational(const mpq_class& value) const {
  if (kind() == FieldKind::Rational) {
    mpq_class v = value;
    v.canonicalize();
    return Elem(data_, std::move(v));
  }
  const mpz_class p(std::to_string(data_->p));
  mpz_class num = value.get_num() % p, den = value.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) raise(ErrorCode::DivisionByZero, "denominator vanishes in characteristic " + std::to_string(data_->p));
  return Elem(data_, static_cast<std::uint32_t>(num.get_ui())) /
         Elem(data_, static_cast<std::uint32_t>(den.get_ui()));
}

Elem Field::parse(const std::string& text) const {
  if (text.empty()) raise(ErrorCode::ParseError, "empty element");
  if (kind() == FieldKind::Rational) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) raise(ErrorCode::ParseError, "bad rational '" + text + "'");
    if (v.get_den() == 0) raise(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    v.canonicalize();
    return Elem(data_, std::move(v));
  }
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    raise(ErrorCode::ParseError, "bad field element '" + text + "'");
  }
  if (pos != text.size()) raise(ErrorCode::ParseError, "bad field element '" + text + "'");
  if (kind() == FieldKind::Prime) return from_int(value);
  if (value < 0 || static_cast<std::uint64_t>(value) >= data_->q)
    raise(ErrorCode::ParseError, "extension element index out of range: '" + text + "'");
  return Elem(data_, static_cast<std::uint32_t>(value));
}

// ---------------------------------------------------------------------------

void Elem::check_same(const Elem& b) const {
  if (f_ != b.f_) raise(ErrorCode::DescriptorMismatch, "operands belong to different fields");
}

bool Elem::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&v_)) return *r == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Elem::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&v_)) return *r == 1;
  return std::get<mpq_class>(v_) == 1;
}

std::uint32_t Elem::index() const {
  if (const auto* r = std::get_if<std::uint32_t>(&v_)) return *r;
  raise(ErrorCode::NotFiniteField, "index() of a rational");
}

const mpq_class& Elem::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
  raise(ErrorCode::DescriptorMismatch, "rational() of a finite field element");
}

Elem Elem::operator-() const {
  if (const auto* r = std::get_if<std::uint32_t>(&v_)) return Elem(f_, f_->neg(*r));
  return Elem(f_, mpq_class(-std::get<mpq_class>(v_)));
}

Elem Elem::inv() const {
  if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
  if (const auto* r = std::get_if<std::uint32_t>(&v_)) return Elem(f_, f_->inv(*r));
  return Elem(f_, mpq_class(1 / std::get<mpq_class>(v_)));
}

Elem Elem::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  if (const auto* r = std::get_if<std::uint32_t>(&v_))
    return Elem(f_, f_->pow(*r, static_cast<std::uint64_t>(e)));
  mpq_class result = 1, base = std::get<mpq_class>(v_);
  for (auto u = static_cast<std::uint64_t>(e); u; u >>= 1) {
    if (u & 1) result *= base;
    base *= base;
  }
  return Elem(f_, std::move(result));
}

Elem Elem::pow(const mpz_class& e) const {
  if (e < 0) return inv().pow(mpz_class(-e));
  Elem result = Field(f_).one(), base = *this;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= base;
    base *= base;
  }
  return result;
}

Elem& Elem::operator+=(const Elem& b) {
  check_same(b);
  if (auto* r = std::get_if<std::uint32_t>(&v_))
    *r = f_->add(*r, std::get<std::uint32_t>(b.v_));
  else
    std::get<mpq_class>(v_) += std::get<mpq_class>(b.v_);
  return *this;
}

Elem& Elem::operator-=(const Elem& b) {
  check_same(b);
  if (auto* r = std::get_if<std::uint32_t>(&v_))
    *r = f_->add(*r, f_->neg(std::get<std::uint32_t>(b.v_)));
  else
    std::get<mpq_class>(v_) -= std::get<mpq_class>(b.v_);
  return *this;
}

Elem& Elem::operator*=(const Elem& b) {
  check_same(b);
  if (auto* r = std::get_if<std::uint32_t>(&v_))
    *r = f_->mul(*r, std::get<std::uint32_t>(b.v_));
  else
    std::get<mpq_class>(v_) *= std::get<mpq_class>(b.v_);
  return *this;
}

Elem& Elem::operator/=(const Elem& b) {
  check_same(b);
  if (b.is_zero()) raise(ErrorCode::DivisionByZero, "division by zero");
  if (auto* r = std::get_if<std::uint32_t>(&v_))
    *r = f_->mul(*r, f_->inv(std::get<std::uint32_t>(b.v_)));
  else
    std::get<mpq_class>(v_) /= std::get<mpq_class>(b.v_);
  return *this;
}

bool operator==(const Elem& a, const Elem& b) {
  return a.f_ == b.f_ && a.v_ == b.v_;
}

int Elem::compare(const Elem& b) const {
  check_same(b);
  if (const auto* r = std::get_if<std::uint32_t>(&v_)) {
    const auto s = std::get<std::uint32_t>(b.v_);
    return *r < s ? -1 : (*r > s ? 1 : 0);
  }
  const int c = cmp(std::get<mpq_class>(v_), std::get<mpq_class>(b.v_));
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string Elem::to_string() const {
  if (const auto* r = std::get_if<std::uint32_t>(&v_)) return std::to_string(*r);
  return std::get<mpq_class>(v_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Elem& e) { return os << e.to_string(); }

}  // namespace frobkit
