#include "fsgss/modmath.hpp"

#include <array>
#include <string>

#include "fsgss/errors.hpp"

namespace fsgss {
namespace {

constexpr std::array<std::uint32_t, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                        43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

constexpr std::uint64_t kFixedBaseSeed = 0x9e3779b97f4a7c15ULL;

void RequireModulus(const BigUint& modulus) {
  if (modulus < BigUint(2)) {
    throw DomainError("modulus must be at least 2");
  }
}

bool MillerRabinRound(const BigUint& x, const BigUint& x_minus_1, const BigUint& odd_part,
                      std::size_t twos, const BigUint& base) {
  BigUint y = ModExp(base, odd_part, x);
  if (y == BigUint(1) || y == x_minus_1) {
    return true;
  }
  for (std::size_t i = 1; i < twos; ++i) {
    y = y * y % x;
    if (y == x_minus_1) {
      return true;
    }
    if (y == BigUint(1)) {
      return false;
    }
  }
  return false;
}

}  // namespace

void GroupParams::Validate() const {
  if (!IsProbablePrime(p1) || !IsProbablePrime(q1)) {
    throw DomainError("p1 and q1 must be prime");
  }
  if (p1 == q1) {
    throw DomainError("p1 and q1 must be distinct");
  }
  if (n != p1 * q1) {
    throw DomainError("n must equal p1 * q1");
  }
  if (p0 != BigUint(4) * n + BigUint(1)) {
    throw DomainError("p0 must equal 4n + 1");
  }
  if (!IsProbablePrime(p0)) {
    throw DomainError("p0 must be prime");
  }
  if (!(BigUint(1) < g2 && g2 < p0)) {
    throw DomainError("g2 must lie in (1, p0)");
  }
  if (ModExp(g2, p1, p0) != BigUint(1)) {
    throw DomainError("g2 must have order p1 modulo p0");
  }
}

GroupParams DeskParams() { return {1013, 11, 23, 253, 122}; }

GroupParams MicroParams() { return {61, 3, 5, 15, 47}; }

BigUint ModExp(const BigUint& base, const BigUint& exponent, const BigUint& modulus) {
  RequireModulus(modulus);
  const BigUint reduced = base % modulus;
  BigUint result(1);
  for (std::size_t i = exponent.BitLength(); i-- > 0;) {
    result = result * result % modulus;
    if (exponent.TestBit(i)) {
      result = result * reduced % modulus;
    }
  }
  return result;
}

std::optional<BigUint> ModInv(const BigUint& x, const BigUint& modulus) {
  RequireModulus(modulus);
  // Extended Euclid on (x mod m, m), tracking the coefficient of x modulo m so
  // everything stays non-negative.
  BigUint old_r = x % modulus;
  BigUint r = modulus;
  BigUint old_s(1);
  BigUint s(0);
  while (!r.IsZero()) {
    const BigUint q = old_r / r;
    BigUint next_r = old_r - q * r;
    BigUint next_s = ModSub(old_s, q * s % modulus, modulus);
    old_r = std::move(r);
    r = std::move(next_r);
    old_s = std::move(s);
    s = std::move(next_s);
  }
  if (old_r != BigUint(1)) {
    return std::nullopt;
  }
  return old_s % modulus;
}

BigUint ModInvOrThrow(const BigUint& x, const BigUint& modulus) {
  auto inverse = ModInv(x, modulus);
  if (!inverse) {
    throw NotInvertible(x.ToDecimal() + " has no inverse modulo " + modulus.ToDecimal());
  }
  return *inverse;
}

BigUint Gcd(BigUint a, BigUint b) {
  while (!b.IsZero()) {
    BigUint r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigUint ModSub(const BigUint& a, const BigUint& b, const BigUint& modulus) {
  const BigUint ar = a % modulus;
  const BigUint br = b % modulus;
  return ar >= br ? ar - br : modulus - (br - ar);
}

bool IsProbablePrime(const BigUint& x, Rng& rng, unsigned rounds) {
  if (rounds == 0) {
    throw DomainError("Miller-Rabin needs at least one round");
  }
  if (x < BigUint(4)) {
    return x == BigUint(2) || x == BigUint(3);
  }
  for (std::uint32_t p : kSmallPrimes) {
    if (x == BigUint(p)) {
      return true;
    }
    if ((x % BigUint(p)).IsZero()) {
      return false;
    }
  }
  const BigUint x_minus_1 = x - BigUint(1);
  BigUint odd_part = x_minus_1;
  std::size_t twos = 0;
  while (!odd_part.IsOdd()) {
    odd_part >>= 1;
    ++twos;
  }
  for (unsigned i = 0; i < rounds; ++i) {
    const BigUint base = rng.InRange(BigUint(2), x_minus_1);
    if (!MillerRabinRound(x, x_minus_1, odd_part, twos, base)) {
      return false;
    }
  }
  return true;
}

bool IsProbablePrime(const BigUint& x, unsigned rounds) {
  const std::uint64_t low = (x % (BigUint(1) << 64)).ToU64();
  Rng rng(kFixedBaseSeed ^ low);
  return IsProbablePrime(x, rng, rounds);
}

std::optional<GroupPrimes> TryGroupPrimes(const BigUint& p1, const BigUint& q1) {
  if (p1 == q1 || !IsProbablePrime(p1) || !IsProbablePrime(q1)) {
    return std::nullopt;
  }
  BigUint p0 = BigUint(4) * p1 * q1 + BigUint(1);
  if (!IsProbablePrime(p0)) {
    return std::nullopt;
  }
  return GroupPrimes{p1, q1, std::move(p0)};
}

GroupPrimes GenGroupPrimes(const CandidateSource& next_candidates, std::size_t budget) {
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    auto [p1, q1] = next_candidates();
    if (auto accepted = TryGroupPrimes(p1, q1)) {
      return *accepted;
    }
  }
  throw GenerationFailed("no (p1, q1) with prime 4*p1*q1 + 1 within " + std::to_string(budget) + " candidates");
}

GroupPrimes GenGroupPrimes(std::size_t bits, Rng& rng, std::size_t budget) {
  if (bits < 3) {
    throw GenerationFailed("group primes need at least 3 bits, got " + std::to_string(bits));
  }
  auto random_prime = [&rng, bits] {
    while (true) {
      BigUint candidate = rng.ExactBits(bits);
      if (IsProbablePrime(candidate, rng)) {
        return candidate;
      }
    }
  };
  return GenGroupPrimes([&] { return std::pair{random_prime(), random_prime()}; }, budget);
}

std::optional<BigUint> SubgroupCandidate(const BigUint& p0, const BigUint& p1, const BigUint& h) {
  BigUint g = ModExp(h, (p0 - BigUint(1)) / p1, p0);
  if (g == BigUint(1)) {
    return std::nullopt;
  }
  return g;
}

BigUint FindSubgroupGenerator(const BigUint& p0, const BigUint& p1, Rng& rng, std::size_t budget) {
  if (p0 < BigUint(5) || p1.IsZero() || !((p0 - BigUint(1)) % p1).IsZero()) {
    throw DomainError("p1 must divide p0 - 1");
  }
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    const BigUint h = rng.InRange(BigUint(2), p0);
    if (auto g = SubgroupCandidate(p0, p1, h)) {
      return *g;
    }
  }
  throw GenerationFailed("no subgroup generator found within " + std::to_string(budget) + " draws");
}

std::optional<BigUint> DlogBruteforce(const BigUint& y, const GroupPublic& group, std::uint64_t cap) {
  if (y.IsZero() || y >= group.p0) {
    throw DomainError("discrete log target must lie in [1, p0)");
  }
  BigUint power(1);
  for (std::uint64_t x = 0; x < cap; ++x) {
    if (power == y) {
      return BigUint(x);
    }
    power = power * group.g2 % group.p0;
    if (power == BigUint(1)) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace fsgss
