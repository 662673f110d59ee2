#pragma once

#include <cstdint>
#include <optional>

#include "frobkit/matrix.hpp"

namespace frobkit {

/// q^e if it does not exceed `bound`.
std::optional<std::uint64_t> bounded_power(std::uint64_t q, std::uint64_t e, std::uint64_t bound);

/// The matrix whose row-major entries are the base-q digits of `index`
/// (least significant digit first). Finite fields only.
Mat matrix_from_index(Field f, std::size_t rows, std::size_t cols, std::uint64_t index);
std::uint64_t matrix_index(const Mat& m);

}  // namespace frobkit
