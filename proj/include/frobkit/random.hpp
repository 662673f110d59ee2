#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "frobkit/field.hpp"

namespace frobkit {

/// Seeded generator with platform-independent draws.
///
/// `split(label)` derives an independent child stream from the parent seed
/// and a label, so suites and cells never share state and the order in which
/// they run does not matter.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const noexcept { return seed_; }
  Rng split(std::string_view label) const;
  Rng split(std::uint64_t label) const { return Rng(mix(seed_ ^ mix(label + 0x632be59bd9b4e019ULL))); }

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  /// Uniform element of a finite field; an integer in [-9, 9] over Q.
  Elem element(Field f);
  Elem nonzero(Field f);

  static std::uint64_t mix(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace frobkit
