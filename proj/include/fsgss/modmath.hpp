#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>

#include "fsgss/bigint.hpp"
#include "fsgss/random.hpp"

namespace fsgss {

inline constexpr unsigned kDefaultMillerRabinRounds = 32;
inline constexpr std::size_t kDefaultGenerationBudget = 4096;
inline constexpr std::uint64_t kDefaultDlogCap = std::uint64_t{1} << 22;

// Public half of the group: p0 = 4n + 1 prime and g2 of prime order p1 | n.
struct GroupPublic {
  BigUint p0;
  BigUint n;
  BigUint g2;

  friend bool operator==(const GroupPublic&, const GroupPublic&) = default;
};

// The System Center's factorisation of n.
struct ScSecret {
  BigUint p1;
  BigUint q1;

  friend bool operator==(const ScSecret&, const ScSecret&) = default;
};

struct GroupParams {
  BigUint p0;
  BigUint p1;
  BigUint q1;
  BigUint n;
  BigUint g2;

  GroupPublic Public() const { return {p0, n, g2}; }
  ScSecret Secret() const { return {p1, q1}; }

  // Throws DomainError naming the first violated relation:
  // p0 = 4n + 1 prime, n = p1*q1 with distinct primes, g2 != 1 and g2^p1 = 1.
  void Validate() const;
};

// The fixed desk-scale set (p0, p1, q1, n, g2) = (1013, 11, 23, 253, 122).
GroupParams DeskParams();
// The micro set (61, 3, 5, 15, 47).
GroupParams MicroParams();

// base^exponent mod modulus by left-to-right square-and-multiply.
// Throws DomainError when modulus < 2.
BigUint ModExp(const BigUint& base, const BigUint& exponent, const BigUint& modulus);

// Inverse by extended Euclid; std::nullopt when gcd(x, modulus) != 1.
std::optional<BigUint> ModInv(const BigUint& x, const BigUint& modulus);

// Same as ModInv but throws NotInvertible.
BigUint ModInvOrThrow(const BigUint& x, const BigUint& modulus);

BigUint Gcd(BigUint a, BigUint b);

// (a - b) mod modulus for a, b of any size.
BigUint ModSub(const BigUint& a, const BigUint& b, const BigUint& modulus);

// Miller-Rabin with `rounds` random bases drawn from rng, after trial division
// by small primes. Values below 4 are decided directly.
bool IsProbablePrime(const BigUint& x, Rng& rng, unsigned rounds = kDefaultMillerRabinRounds);
// Same, with bases drawn from a fixed internal stream.
bool IsProbablePrime(const BigUint& x, unsigned rounds = kDefaultMillerRabinRounds);

struct GroupPrimes {
  BigUint p1;
  BigUint q1;
  BigUint p0;
};

// Accepts (p1, q1) iff both are prime, distinct, and 4*p1*q1 + 1 is prime.
std::optional<GroupPrimes> TryGroupPrimes(const BigUint& p1, const BigUint& q1);

using CandidateSource = std::function<std::pair<BigUint, BigUint>()>;

// Pulls candidate pairs until TryGroupPrimes accepts one.
// Throws GenerationFailed after `budget` rejected pairs.
GroupPrimes GenGroupPrimes(const CandidateSource& next_candidates,
                           std::size_t budget = kDefaultGenerationBudget);

// Draws p1, q1 independently as primes of exactly `bits` bits.
GroupPrimes GenGroupPrimes(std::size_t bits, Rng& rng, std::size_t budget = kDefaultGenerationBudget);

// h^((p0 - 1) / p1) mod p0, or std::nullopt when that is 1.
std::optional<BigUint> SubgroupCandidate(const BigUint& p0, const BigUint& p1, const BigUint& h);

BigUint FindSubgroupGenerator(const BigUint& p0, const BigUint& p1, Rng& rng,
                              std::size_t budget = kDefaultGenerationBudget);

// Smallest x with g2^x = y (mod p0), scanning until the powers of g2 cycle back
// to 1 or `cap` is reached. Needs only the public group values.
std::optional<BigUint> DlogBruteforce(const BigUint& y, const GroupPublic& group,
                                      std::uint64_t cap = kDefaultDlogCap);

}  // namespace fsgss
