#include "frobkit/poly.hpp"

#include <algorithm>
#include <sstream>

#include "frobkit/error.hpp"

namespace frobkit {

Poly::Poly(Field f, std::vector<Elem> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!(c.field() == field_)) raise(ErrorCode::DescriptorMismatch, "coefficient from another field");
  trim();
}

Poly Poly::constant(const Elem& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Elem& c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, c.field().zero());
  v[degree] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::from_ints(Field f, const std::vector<std::int64_t>& coeffs) {
  std::vector<Elem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(f.from_int(c));
  return Poly(f, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Elem Poly::leading() const {
  if (c_.empty()) raise(ErrorCode::InvalidArgument, "leading coefficient of the zero polynomial");
  return c_.back();
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  const Elem inv = c_.back().inv();
  Poly r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

Poly Poly::derivative() const {
  std::vector<Elem> d;
  for (std::size_t i = 1; i < c_.size(); ++i)
    d.push_back(c_[i] * field_.from_int(static_cast<std::int64_t>(i)));
  return Poly(field_, std::move(d));
}

Elem Poly::operator()(const Elem& at) const {
  Elem r = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) r = r * at + c_[i];
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& b) {
  if (!(field_ == b.field_)) raise(ErrorCode::DescriptorMismatch, "polynomials over different fields");
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), field_.zero());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& b) {
  if (!(field_ == b.field_)) raise(ErrorCode::DescriptorMismatch, "polynomials over different fields");
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), field_.zero());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& b) {
  if (!(field_ == b.field_)) raise(ErrorCode::DescriptorMismatch, "polynomials over different fields");
  if (c_.empty() || b.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Elem> r(c_.size() + b.c_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += c_[i] * b.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Elem& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Poly Poly::pow(std::uint64_t e) const {
  Poly r = constant(field_.one()), base = *this;
  for (; e; e >>= 1) {
    if (e & 1) r *= base;
    if (e > 1) base *= base;
  }
  return r;
}

int Poly::compare(const Poly& b) const {
  if (degree() != b.degree()) return degree() < b.degree() ? -1 : 1;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const int c = c_[i].compare(b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

namespace {

// Coefficient text for the human readable form; extension elements and
// negative or fractional rationals are parenthesised where needed.
std::string coeff_text(const Elem& c) {
  if (c.field().kind() == FieldKind::Extension) return "[" + c.to_string() + "]";
  return c.to_string();
}

}  // namespace

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Elem& c = c_[i];
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (field_.kind() == FieldKind::Rational && c.rational() < 0) {
      negative = true;
      body = (-c).to_string();
    } else {
      body = coeff_text(c);
    }
    const bool unit = body == "1";
    std::ostringstream term;
    if (i == 0) {
      term << body;
    } else {
      if (!unit) term << body;
      term << var;
      if (i > 1) term << '^' << i;
    }
    if (first)
      os << (negative ? "-" : "") << term.str();
    else
      os << (negative ? "-" : "+") << term.str();
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (!(a.field() == b.field())) raise(ErrorCode::DescriptorMismatch, "polynomials over different fields");
  const Field f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Elem> q(r.size() - db, f.zero());
  const Elem linv = bc.back().inv();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].is_zero()) continue;
    const Elem t = r[i] * linv;
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * bc[j];
  }
  r.resize(db, f.zero());
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

XgcdResult xgcd(const Poly& a, const Poly& b) {
  const Field f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f.one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
    Poly t = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem inv = r0.leading().inv();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return (a / gcd(a, b) * b).monic();
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly pow_mod(const Poly& a, const mpz_class& e, const Poly& m) {
  if (e < 0) raise(ErrorCode::InvalidArgument, "negative exponent in pow_mod");
  Poly result = Poly::constant(a.field().one()) % m;
  Poly base = a % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul_mod(result, base, m);
    if (i + 1 < bits) base = mul_mod(base, base, m);
  }
  return result;
}

RationalFunction::RationalFunction(Poly num)
    : num_(std::move(num)), den_(Poly::constant(num_.field().one())) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) raise(ErrorCode::DivisionByZero, "rational function with zero denominator");
  const Poly g = gcd(num_, den_);
  if (!g.is_zero() && !g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const Elem lc = den_.leading();
  if (!lc.is_one()) {
    const Elem inv = lc.inv();
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) raise(ErrorCode::DivisionByZero, "inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

// --- text format -----------------------------------------------------------

namespace {

std::string trim_ws(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim_ws(cur));
  return out;
}

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    raise(ErrorCode::ParseError, "bad " + what + " '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    raise(ErrorCode::ParseError, "bad " + what + " '" + s + "'");
  }
}

}  // namespace

Field parse_field_tag(const std::string& tag) {
  std::istringstream is(trim_ws(tag));
  std::string word;
  is >> word;
  if (word == "Q") {
    if (is >> word) raise(ErrorCode::ParseError, "trailing text after 'Q'");
    return Field::rationals();
  }
  if (word != "Fq") raise(ErrorCode::ParseError, "unknown field tag '" + word + "'");
  std::uint64_t p = 0, k = 0;
  std::vector<std::uint32_t> modulus;
  while (is >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) raise(ErrorCode::ParseError, "bad field tag token '" + word + "'");
    const std::string key = word.substr(0, eq), value = word.substr(eq + 1);
    if (key == "p") {
      p = parse_uint(value, "characteristic");
    } else if (key == "k") {
      k = parse_uint(value, "degree");
    } else if (key == "m") {
      for (const auto& c : split(value, ','))
        modulus.push_back(static_cast<std::uint32_t>(parse_uint(c, "modulus coefficient")));
    } else {
      raise(ErrorCode::ParseError, "unknown field tag key '" + key + "'");
    }
  }
  if (p == 0 || k == 0) raise(ErrorCode::ParseError, "field tag needs p= and k=");
  try {
    if (!modulus.empty()) {
      if (modulus.size() != k + 1) raise(ErrorCode::ParseError, "modulus degree does not match k");
      return Field::extension(p, modulus);
    }
    return Field::finite(p, static_cast<unsigned>(k));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    raise(ErrorCode::ParseError, e.what());
  }
}

std::string to_text(const Poly& f) {
  std::ostringstream os;
  os << f.field().tag() << " | ";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) os << ',';
    os << f.coeffs()[i].to_string();
  }
  return os.str();
}

Poly parse_poly(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos) raise(ErrorCode::ParseError, "polynomial text needs '<field> | <coeffs>'");
  const Field f = parse_field_tag(text.substr(0, bar));
  const std::string body = trim_ws(text.substr(bar + 1));
  std::vector<Elem> coeffs;
  if (!body.empty())
    for (const auto& tok : split(body, ',')) coeffs.push_back(f.parse(tok));
  return Poly(f, std::move(coeffs));
}

}  // namespace frobkit
