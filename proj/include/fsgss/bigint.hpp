#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace fsgss {

// Non-negative arbitrary-precision integer. Subtraction below zero throws
// DomainError rather than wrapping, so every value stays canonical.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  static BigUint FromDecimal(std::string_view digits);
  static BigUint FromBigEndian(std::span<const std::uint8_t> bytes);

  // Canonical hex: lowercase, no prefix, no leading zeros, "0" for zero.
  std::string ToHex() const;
  std::string ToDecimal() const;

  bool IsZero() const { return sgn(value_) == 0; }
  bool IsOdd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }
  std::size_t BitLength() const;
  bool TestBit(std::size_t index) const;
  bool FitsU64() const { return BitLength() <= 64; }
  std::uint64_t ToU64() const;

  BigUint& operator+=(const BigUint& other);
  BigUint& operator-=(const BigUint& other);
  BigUint& operator*=(const BigUint& other);
  BigUint& operator/=(const BigUint& other);
  BigUint& operator%=(const BigUint& other);
  BigUint& operator>>=(std::size_t shift);
  BigUint& operator<<=(std::size_t shift);

  friend BigUint operator+(BigUint lhs, const BigUint& rhs) { return lhs += rhs; }
  friend BigUint operator-(BigUint lhs, const BigUint& rhs) { return lhs -= rhs; }
  friend BigUint operator*(BigUint lhs, const BigUint& rhs) { return lhs *= rhs; }
  friend BigUint operator/(BigUint lhs, const BigUint& rhs) { return lhs /= rhs; }
  friend BigUint operator%(BigUint lhs, const BigUint& rhs) { return lhs %= rhs; }
  friend BigUint operator>>(BigUint lhs, std::size_t shift) { return lhs >>= shift; }
  friend BigUint operator<<(BigUint lhs, std::size_t shift) { return lhs <<= shift; }

  friend bool operator==(const BigUint& lhs, const BigUint& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigUint& lhs, const BigUint& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpz_class& raw() const { return value_; }

 private:
  explicit BigUint(mpz_class value) : value_(std::move(value)) {}

  mpz_class value_;
};

// |a - b| without the underflow check.
BigUint AbsDiff(const BigUint& a, const BigUint& b);

// Parses canonical hex; std::nullopt on empty input, uppercase, a prefix,
// non-hex characters, or leading zeros.
std::optional<BigUint> ParseCanonicalHex(std::string_view text);

}  // namespace fsgss
