#pragma once

#include <vector>

#include "frobkit/matrix.hpp"
#include "frobkit/poly.hpp"

namespace frobkit {

inline constexpr std::size_t kMinorSumBruteForceCap = 8;

/// det(xI - A) via similarity reduction to upper Hessenberg form.
Poly charpoly(const Mat& a);

/// det(xI - A) via Berkowitz's division-free recursion. Shares no code
/// with `charpoly` so the two can check each other.
Poly charpoly_berkowitz(const Mat& a);

/// c_0..c_n where c_k is the sum of the k x k principal minors. Uses
/// subset enumeration up to kMinorSumBruteForceCap, the characteristic
/// polynomial beyond it.
std::vector<Elem> principal_minor_sums(const Mat& a);
std::vector<Elem> principal_minor_sums_bruteforce(const Mat& a);

/// c_k read off P(x) = sum (-1)^k c_k x^{n-k}, and back.
std::vector<Elem> minor_sums_from_charpoly(const Poly& p);
Poly charpoly_from_minor_sums(const std::vector<Elem>& c, Field f);

/// Least-degree monic annihilator, found as the first linear dependence
/// among I, A, A^2, ...
Poly minimal_polynomial(const Mat& a);

/// f(A) by Horner's rule.
Mat poly_at_matrix(const Poly& f, const Mat& a);
/// num(A) den(A)^{-1}; requires gcd(den, charpoly(A)) = 1.
Mat poly_at_matrix(const RationalFunction& f, const Mat& a);

}  // namespace frobkit
