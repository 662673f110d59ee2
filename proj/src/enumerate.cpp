#include "frobkit/enumerate.hpp"

#include "frobkit/error.hpp"

namespace frobkit {

std::optional<std::uint64_t> bounded_power(std::uint64_t q, std::uint64_t e, std::uint64_t bound) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (q != 0 && r > bound / q) return std::nullopt;
    r *= q;
  }
  if (r > bound) return std::nullopt;
  return r;
}

Mat matrix_from_index(Field f, std::size_t rows, std::size_t cols, std::uint64_t index) {
  if (!f.is_finite()) raise(ErrorCode::NotFiniteField, "enumeration needs a finite field");
  const std::uint64_t q = f.order();
  std::vector<Elem> e;
  e.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    e.push_back(f.element(index % q));
    index /= q;
  }
  return Mat(f, rows, cols, std::move(e));
}

std::uint64_t matrix_index(const Mat& m) {
  const std::uint64_t q = m.field().order();
  if (q == 0) raise(ErrorCode::NotFiniteField, "enumeration needs a finite field");
  std::uint64_t r = 0;
  const auto& e = m.entries();
  for (std::size_t i = e.size(); i-- > 0;) r = r * q + e[i].index();
  return r;
}

}  // namespace frobkit
