#include "frobkit/factor.hpp"

#include <algorithm>

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

void require_finite(const Poly& f) {
  if (!f.field().is_finite()) raise(ErrorCode::NotFiniteField, "factorization needs a finite field");
}

mpz_class order_of(Field f) { return mpz_class(std::to_string(f.order())); }

// For c(x) = sum a_{ip} x^{ip}: the polynomial sum a_{ip}^{1/p} x^i.
Poly pth_root(const Poly& c) {
  const Field f = c.field();
  const std::uint64_t p = f.characteristic();
  mpz_class root_exp = 1;
  for (unsigned i = 1; i < f.degree(); ++i) root_exp *= static_cast<unsigned long>(p);
  std::vector<Elem> r;
  for (std::size_t i = 0; i < c.coeffs().size(); i += p) r.push_back(c.coeffs()[i].pow(root_exp));
  return Poly(f, std::move(r));
}

Poly x_minus(const Poly& h) { return h - Poly::x(h.field()); }

}  // namespace

std::vector<Factor> squarefree_decomposition(const Poly& f) {
  require_finite(f);
  if (f.is_zero()) raise(ErrorCode::InvalidArgument, "square-free decomposition of zero");
  std::vector<Factor> out;
  if (f.degree() == 0) return out;
  const Poly g = f.monic();
  Poly c = gcd(g, g.derivative());
  Poly w = g / c;
  unsigned i = 1;
  while (!w.is_one()) {
    const Poly y = gcd(w, c);
    const Poly fac = w / y;
    if (!fac.is_one()) out.push_back({fac, i});
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) {
    const auto p = static_cast<unsigned>(f.field().characteristic());
    for (auto& [h, m] : squarefree_decomposition(pth_root(c))) out.push_back({h, m * p});
  }
  return out;
}

std::vector<Factor> distinct_degree_factorization(const Poly& f) {
  require_finite(f);
  std::vector<Factor> out;
  Poly rest = f.monic();
  const mpz_class q = order_of(f.field());
  Poly h = Poly::x(f.field()) % rest;
  for (unsigned d = 1; rest.degree() >= 2 * static_cast<int>(d); ++d) {
    h = pow_mod(h, q, rest);
    const Poly g = gcd(x_minus(h), rest);
    if (!g.is_one()) {
      out.push_back({g, d});
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back({rest, static_cast<unsigned>(rest.degree())});
  return out;
}

std::vector<Poly> equal_degree_factorization(const Poly& f, unsigned d, Rng& rng) {
  require_finite(f);
  const Field field = f.field();
  if (field.characteristic() == 2)
    raise(ErrorCode::EvenCharacteristicUnsupported, "equal-degree splitting needs odd characteristic");
  if (d == 0 || f.degree() % static_cast<int>(d) != 0)
    raise(ErrorCode::InvalidArgument, "degree is not a multiple of the factor degree");
  if (f.degree() == static_cast<int>(d)) return {f.monic()};

  mpz_class qd = 1;
  for (unsigned i = 0; i < d; ++i) qd *= static_cast<unsigned long>(field.order());
  const mpz_class half = (qd - 1) / 2;
  const Poly one = Poly::constant(field.one());
  const Poly m = f.monic();
  for (;;) {
    std::vector<Elem> coeffs;
    for (int i = 0; i < m.degree(); ++i) coeffs.push_back(rng.element(field));
    const Poly a(field, std::move(coeffs));
    if (a.degree() <= 0) continue;
    Poly g = gcd(a, m);
    if (g.is_one()) g = gcd(pow_mod(a, half, m) - one, m);
    if (g.degree() > 0 && g.degree() < m.degree()) {
      auto left = equal_degree_factorization(g, d, rng);
      auto right = equal_degree_factorization(m / g, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<Factor> factor(const Poly& f, Rng& rng) {
  require_finite(f);
  if (f.field().characteristic() == 2)
    raise(ErrorCode::EvenCharacteristicUnsupported, "factorization needs odd characteristic");
  if (f.is_zero()) raise(ErrorCode::InvalidArgument, "factorization of the zero polynomial");
  std::vector<Factor> out;
  for (const auto& [sqf, mult] : squarefree_decomposition(f)) {
    for (const auto& [block, d] : distinct_degree_factorization(sqf)) {
      for (auto& irr : equal_degree_factorization(block, d, rng)) out.push_back({irr, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    const int c = a.f.compare(b.f);
    return c != 0 ? c < 0 : a.multiplicity < b.multiplicity;
  });
  // Merge repeats (possible after the p-th root branch).
  std::vector<Factor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().f == fac.f)
      merged.back().multiplicity += fac.multiplicity;
    else
      merged.push_back(std::move(fac));
  }
  return merged;
}

std::vector<Factor> factor(const Poly& f) {
  Rng rng(0x5eed'f4c7'0000'0001ULL);
  return factor(f, rng);
}

bool is_irreducible(const Poly& f) {
  require_finite(f);
  if (f.degree() < 1) raise(ErrorCode::InvalidArgument, "irreducibility of a constant");
  const int n = f.degree();
  if (n == 1) return true;
  const Poly m = f.monic();
  const mpz_class q = order_of(f.field());
  std::vector<int> primes;
  for (int t = n, r = 2; t > 1; ++r) {
    if (t % r == 0) {
      primes.push_back(r);
      while (t % r == 0) t /= r;
    }
  }
  // powers[i] = x^{q^i} mod m
  std::vector<Poly> powers{Poly::x(f.field()) % m};
  for (int i = 1; i <= n; ++i) powers.push_back(pow_mod(powers.back(), q, m));
  if (!x_minus(powers[n]).is_zero()) return false;
  for (int r : primes)
    if (!gcd(x_minus(powers[n / r]), m).is_one()) return false;
  return true;
}

Poly expand(const std::vector<Factor>& factors, Field field) {
  Poly r = Poly::constant(field.one());
  for (const auto& [f, m] : factors) r *= f.pow(m);
  return r;
}

}  // namespace frobkit
