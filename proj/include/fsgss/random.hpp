#pragma once

#include <cstdint>
#include <random>

#include "fsgss/bigint.hpp"

namespace fsgss {

// Seedable randomness source. std::mt19937_64 is fully specified by the
// standard and all range reduction here is done by rejection on raw words, so a
// seed reproduces the same draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, bound); bound must be non-zero.
  BigUint Below(const BigUint& bound);
  // Uniform in [lo, hi); requires lo < hi.
  BigUint InRange(const BigUint& lo, const BigUint& hi);
  // Uniform among integers with exactly `bits` bits (top bit set).
  BigUint ExactBits(std::size_t bits);

  // Derives an independent child stream; used to give each party its own source.
  Rng Fork() { return Rng(NextU64()); }

 private:
  BigUint RandomBits(std::size_t bits);

  std::mt19937_64 engine_;
};

}  // namespace fsgss
