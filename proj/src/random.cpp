#include "fsgss/random.hpp"

#include "fsgss/errors.hpp"

namespace fsgss {

BigUint Rng::RandomBits(std::size_t bits) {
  BigUint out;
  std::size_t remaining = bits;
  while (remaining > 0) {
    const std::size_t take = remaining < 64 ? remaining : 64;
    std::uint64_t word = NextU64();
    if (take < 64) {
      word &= (std::uint64_t{1} << take) - 1;
    }
    out <<= take;
    out += BigUint(word);
    remaining -= take;
  }
  return out;
}

BigUint Rng::Below(const BigUint& bound) {
  if (bound.IsZero()) {
    throw DomainError("Rng::Below requires a non-zero bound");
  }
  const std::size_t bits = bound.BitLength();
  while (true) {
    BigUint candidate = RandomBits(bits);
    if (candidate < bound) {
      return candidate;
    }
  }
}

BigUint Rng::InRange(const BigUint& lo, const BigUint& hi) {
  if (!(lo < hi)) {
    throw DomainError("Rng::InRange requires lo < hi");
  }
  return lo + Below(hi - lo);
}

BigUint Rng::ExactBits(std::size_t bits) {
  if (bits == 0) {
    throw DomainError("Rng::ExactBits requires bits >= 1");
  }
  const BigUint top = BigUint(1) << (bits - 1);
  return top + Below(top);
}

}  // namespace fsgss
