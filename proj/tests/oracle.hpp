// Slow reference implementations used to cross-check the library.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "frobkit/matrix.hpp"
#include "frobkit/poly.hpp"

namespace oracle {

using frobkit::Elem;
using frobkit::Field;
using frobkit::Mat;
using frobkit::Poly;

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

// Leibniz expansion over any commutative entry type.
template <class T, class Get>
T leibniz(std::size_t n, T one, Get entry) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  T total = one - one;
  do {
    T term = one;
    for (std::size_t i = 0; i < n; ++i) term = term * entry(i, p[i]);
    total = permutation_sign(p) > 0 ? total + term : total - term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Elem det(const Mat& a) {
  return leibniz<Elem>(a.rows(), a.field().one(), [&](std::size_t i, std::size_t j) { return a(i, j); });
}

// det(xI - A) with polynomial entries.
inline Poly charpoly(const Mat& a) {
  const Field f = a.field();
  const Poly x = Poly::x(f);
  return leibniz<Poly>(a.rows(), Poly::constant(f.one()), [&](std::size_t i, std::size_t j) {
    Poly e = -Poly::constant(a(i, j));
    return i == j ? e + x : e;
  });
}

// c_0..c_n as sums of principal minors over every index subset.
inline std::vector<Elem> minor_sums(const Mat& a) {
  const std::size_t n = a.rows();
  std::vector<Elem> c(n + 1, a.field().zero());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    Mat sub(a.field(), idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = a(idx[i], idx[j]);
    c[idx.size()] += oracle::det(sub);
  }
  return c;
}

inline Mat eval(const Poly& p, const Mat& a) {
  Mat out(a.field(), a.rows(), a.cols());
  Mat power = Mat::identity(a.field(), a.rows());
  for (const auto& c : p.coeffs()) {
    out += c * power;
    power = power * a;
  }
  return out;
}

// Every monic polynomial of degree d over a finite field.
inline std::vector<Poly> monics(Field f, std::size_t d) {
  std::vector<Poly> out;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= f.order();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Elem> c;
    std::uint64_t r = idx;
    for (std::size_t i = 0; i < d; ++i) {
      c.push_back(f.element(r % f.order()));
      r /= f.order();
    }
    c.push_back(f.one());
    out.emplace_back(f, std::move(c));
  }
  return out;
}

inline Poly minimal_polynomial(const Mat& a) {
  for (std::size_t d = 0;; ++d)
    for (const auto& p : monics(a.field(), d))
      if (eval(p, a).is_zero()) return p;
}

inline bool irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(f.degree()); ++d)
    for (const auto& g : monics(f.field(), d))
      if ((f % g).is_zero()) return false;
  return true;
}

// Number of monic irreducibles of degree d over F_q: (1/d) sum mu(d/e) q^e.
inline std::uint64_t irreducible_count(std::uint64_t q, std::uint64_t d) {
  auto mu = [](std::uint64_t m) {
    int r = 1;
    for (std::uint64_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        r = -r;
      }
    return m > 1 ? -r : r;
  };
  std::int64_t total = 0;
  for (std::uint64_t e = 1; e <= d; ++e)
    if (d % e == 0) {
      std::int64_t qe = 1;
      for (std::uint64_t i = 0; i < e; ++i) qe *= static_cast<std::int64_t>(q);
      total += mu(d / e) * qe;
    }
  return static_cast<std::uint64_t>(total) / d;
}

}  // namespace oracle
