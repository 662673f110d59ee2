#pragma once

#include <optional>
#include <vector>

#include "frobkit/matrix.hpp"
#include "frobkit/triple.hpp"

namespace frobkit {

/// m_j = phi A^j v for j < length.
struct MomentSequence {
  std::vector<Elem> m;
  std::size_t length() const noexcept { return m.size(); }
  bool all_zero() const;
};

/// Krylov iteration w <- A w; never forms a matrix power.
MomentSequence moments(const Mat& a, const Mat& v, const Mat& phi, std::size_t length);
MomentSequence moments(const Triple& t, std::size_t length);

/// Principal-minor sums of A + lambda v (x) phi from those of A:
///   c'_k = c_k + lambda * sum_{j<k} (-1)^j c_{k-1-j} m_j.
/// O(n^2) scalar work; `c` must start with 1 and `m` hold at least n moments.
std::vector<Elem> ck_update(const std::vector<Elem>& c, const MomentSequence& m, const Elem& lambda);

/// C_1..C_{n+1} from C_1 = I, C_k = c_{k-1}(A) I - A C_{k-1}, with the c_k
/// taken from the characteristic polynomial. C_{n+1} vanishes.
std::vector<Mat> faddeev_chain(const Mat& a);

/// (A + lambda v (x) phi, v, phi).
Triple nu_lambda(const Triple& t, const Elem& lambda);

struct NormalizerResult {
  bool is_zero = false;     // M = 0: every conjugate has a zero corner
  std::optional<Mat> B;     // invertible, (B M B^{-1})_{1,1} != 0
  std::optional<Mat> v;     // the pair used to build B
  std::optional<Mat> phi;
};

/// For M != 0, builds B from a pair (v, phi) with phi v != 0 and
/// phi M v != 0: B^{-1} = [v | basis of ker phi], so B v = e_1 and
/// phi B^{-1} = (phi v) e_1^*. The corner of B M B^{-1} is then
/// phi M v / phi v. The result is verified before it is returned.
NormalizerResult entry_normalizer_search(const Mat& m);

}  // namespace frobkit
