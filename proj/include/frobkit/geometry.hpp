#pragma once

#include <optional>
#include <vector>

#include "frobkit/matrix.hpp"
#include "frobkit/poly.hpp"
#include "frobkit/random.hpp"
#include "frobkit/rank_one.hpp"
#include "frobkit/triple.hpp"

namespace frobkit {

/// Element (g, sign) of GL(V) x| S_2, where the sign -1 acts on GL(V) by
/// g -> (g^{-1})^t.
struct GroupElem {
  Mat g;
  int sign = 1;

  GroupElem(Mat g_, int sign_);
  static GroupElem identity(Field f, std::size_t n) { return {Mat::identity(f, n), 1}; }

  friend GroupElem operator*(const GroupElem& a, const GroupElem& b);
  friend bool operator==(const GroupElem& a, const GroupElem& b) { return a.sign == b.sign && a.g == b.g; }
};

/// (g, 1):  (g A g^{-1}, g v, phi g^{-1})
/// (g, -1): (g A^t g^{-1}, g phi^t, v^t g^{-1})
Triple act(const GroupElem& e, const Triple& t);

/// The characteristic polynomial of the matrix component.
Poly delta(const Triple& t);

/// phi v.
Elem quad_form(const Mat& v, const Mat& phi);

struct RaMembership {
  bool member = false;
  std::optional<std::size_t> witness;  // first j with phi A^j v != 0
};
/// All moments vanish. Only m_0..m_{n-1} are inspected: by Cayley-Hamilton
/// every A^k with k >= n is a combination of lower powers.
RaMembership in_RA(const Triple& t);
/// Same test over an explicit number of moments (used to double-check the truncation).
RaMembership in_RA(const Triple& t, std::size_t moment_count);

struct QaMembership {
  bool member = false;
  std::optional<Mat> witness;  // B with [A, B] = v (x) phi
};
/// Solves [A, B] = v (x) phi in n^2 unknowns; any witness is re-checked.
QaMembership in_QA(const Triple& t);
/// Variant reusing a precomputed `commutator_operator(t.A)`.
QaMembership in_QA(const Triple& t, const Mat& ad);

/// (A, f(A) v, phi f(A)) for f coprime to charpoly(A) in both numerator and
/// denominator.
Triple rho_f(const Triple& t, const RationalFunction& f);

/// Filtration U_i = f(A)^i V for A the companion of f^s, with the dual
/// U*_i = annihilator of U_{s-i}.
struct Filtration {
  Poly f;
  unsigned s = 0;
  Mat A;
  std::vector<Mat> U;      // U[i]: n x dim basis columns, i = 0..s
  std::vector<Mat> Ustar;  // Ustar[i]: dim x n basis rows, i = 0..s
};
Filtration filtration(const Poly& f, unsigned s);

struct DualFiltrationCheck {
  bool dims_ok = false;        // dim U_i = dim U*_i = (s - i) k
  bool nested = false;         // U_{i+1} inside U_i
  bool row_space_ok = false;   // U*_i = row space of f(A)^i
  bool transpose_map_ok = false;  // U*_i = T(U_i), T(v) = v^t g^{-1}
  bool ok() const { return dims_ok && nested && row_space_ok && transpose_map_ok; }
};
DualFiltrationCheck check_dual_filtration(const Filtration& fl);

struct RaStructureReport {
  bool holds = false;
  std::uint64_t pairs = 0;
  std::uint64_t ra_members = 0;
  std::vector<std::uint64_t> per_stratum;  // pairs in U_i + U*_{s-i}, i = 0..s
  std::optional<std::pair<Mat, Mat>> counterexample;
};
inline constexpr std::uint64_t kDefaultExhaustiveBound = 6561;  // 3^8 pairs
/// Enumerates all (v, phi) and checks R_A = union of U_i + U*_{s-i}.
RaStructureReport ra_structure_check(const Poly& f, unsigned s,
                                     std::uint64_t bound = kDefaultExhaustiveBound);

struct LinAlgReport {
  bool cond1 = false;  // all moments vanish
  bool cond2 = false;  // charpoly fixed for every tested lambda
  bool cond3 = false;  // charpoly fixed for some tested lambda != 0
  std::vector<Elem> lambdas_tested;
  bool consistent() const { return cond1 == cond2 && cond2 == cond3; }
};
/// Over F_q every lambda is tried; over Q the sample {+-1, ..., +-rational_sample}.
LinAlgReport linalg_equivalence_report(const Triple& t, std::int64_t rational_sample = 8);

struct DirectSumReport {
  bool holds = false;
  std::uint64_t pairs = 0;
  std::uint64_t joint_members = 0;          // pairs in Q_{A1 + A2}
  std::uint64_t blockwise_members = 0;      // pairs in Q_{A1} x Q_{A2}
  std::uint64_t forward_violations = 0;     // joint member, not blockwise
  std::uint64_t converse_violations = 0;    // blockwise where a theorem promises joint, not joint
  std::uint64_t converse_shared_spectrum_gaps = 0;  // blockwise, not joint, charpolys not coprime
  std::uint64_t qa_not_ra = 0;              // Q member outside R
  bool coprime_charpolys = false;
  std::optional<Triple> counterexample;
};
/// Checks Q_{A1+A2} inside Q_{A1} x Q_{A2} on every pair (exhaustive when
/// q^{2n} <= bound, otherwise `sample` random pairs), and the converse where
/// it is guaranteed: coprime characteristic polynomials, or vanishing cross
/// terms v1 (x) phi2 = v2 (x) phi1 = 0.
DirectSumReport qa_directsum_check(const Mat& a1, const Mat& a2, std::uint64_t sample, Rng& rng,
                                   std::uint64_t bound = kDefaultExhaustiveBound);

}  // namespace frobkit
