#include "frobkit/random.hpp"

#include "frobkit/error.hpp"

namespace frobkit {

Rng Rng::split(std::string_view label) const {
  // FNV-1a over the label.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return split(h);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) raise(ErrorCode::InvalidArgument, "Rng::below(0)");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Elem Rng::element(Field f) {
  if (f.is_finite()) return f.element(below(f.order()));
  return f.from_int(between(-9, 9));
}

Elem Rng::nonzero(Field f) {
  if (f.is_finite()) return f.element(1 + below(f.order() - 1));
  std::int64_t v = between(-9, 8);
  return f.from_int(v >= 0 ? v + 1 : v);
}

}  // namespace frobkit
