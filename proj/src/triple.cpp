#include "frobkit/triple.hpp"

#include "frobkit/error.hpp"

namespace frobkit {

Triple::Triple(Mat a, Mat v_, Mat phi_) : A(std::move(a)), v(std::move(v_)), phi(std::move(phi_)) {
  const std::size_t n = A.rows();
  if (!A.is_square() || v.rows() != n || v.cols() != 1 || phi.rows() != 1 || phi.cols() != n)
    raise(ErrorCode::ShapeMismatch, "triple needs shapes n x n, n x 1, 1 x n");
  if (!(v.field() == A.field()) || !(phi.field() == A.field()))
    raise(ErrorCode::DescriptorMismatch, "triple components over different fields");
}

}  // namespace frobkit
