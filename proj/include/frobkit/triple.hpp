#pragma once

#include "frobkit/matrix.hpp"

namespace frobkit {

/// A point (A, v, phi) of gl(V) x V x V*.
struct Triple {
  Mat A;    // n x n
  Mat v;    // n x 1
  Mat phi;  // 1 x n

  Triple(Mat a, Mat v_, Mat phi_);

  std::size_t dim() const noexcept { return A.rows(); }
  Field field() const noexcept { return A.field(); }

  friend bool operator==(const Triple& a, const Triple& b) {
    return a.A == b.A && a.v == b.v && a.phi == b.phi;
  }
};

}  // namespace frobkit
