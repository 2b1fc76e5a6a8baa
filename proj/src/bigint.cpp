#include "fsgss/bigint.hpp"

#include <string>

#include "fsgss/errors.hpp"

namespace fsgss {

BigUint::BigUint(std::uint64_t value) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 expected");
  value_ = static_cast<unsigned long>(value);
}

BigUint BigUint::FromDecimal(std::string_view digits) {
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ParseError("not a decimal integer: '" + std::string(digits) + "'");
  }
  return BigUint(mpz_class(std::string(digits), 10));
}

BigUint BigUint::FromBigEndian(std::span<const std::uint8_t> bytes) {
  mpz_class value;
  if (!bytes.empty()) {
    mpz_import(value.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return BigUint(std::move(value));
}

std::string BigUint::ToHex() const { return value_.get_str(16); }

std::string BigUint::ToDecimal() const { return value_.get_str(10); }

std::size_t BigUint::BitLength() const {
  return IsZero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

bool BigUint::TestBit(std::size_t index) const { return mpz_tstbit(value_.get_mpz_t(), index) != 0; }

std::uint64_t BigUint::ToU64() const {
  if (!FitsU64()) {
    throw DomainError("value does not fit in 64 bits");
  }
  return mpz_get_ui(value_.get_mpz_t());
}

BigUint& BigUint::operator+=(const BigUint& other) {
  value_ += other.value_;
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& other) {
  if (value_ < other.value_) {
    throw DomainError("BigUint subtraction underflow");
  }
  value_ -= other.value_;
  return *this;
}

BigUint& BigUint::operator*=(const BigUint& other) {
  value_ *= other.value_;
  return *this;
}

BigUint& BigUint::operator/=(const BigUint& other) {
  if (other.IsZero()) {
    throw DomainError("division by zero");
  }
  mpz_fdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), other.value_.get_mpz_t());
  return *this;
}

BigUint& BigUint::operator%=(const BigUint& other) {
  if (other.IsZero()) {
    throw DomainError("reduction modulo zero");
  }
  mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), other.value_.get_mpz_t());
  return *this;
}

BigUint& BigUint::operator>>=(std::size_t shift) {
  mpz_fdiv_q_2exp(value_.get_mpz_t(), value_.get_mpz_t(), shift);
  return *this;
}

BigUint& BigUint::operator<<=(std::size_t shift) {
  mpz_mul_2exp(value_.get_mpz_t(), value_.get_mpz_t(), shift);
  return *this;
}

BigUint AbsDiff(const BigUint& a, const BigUint& b) { return a < b ? b - a : a - b; }

std::optional<BigUint> ParseCanonicalHex(std::string_view text) {
  if (text.empty() || text.find_first_not_of("0123456789abcdef") != std::string_view::npos) {
    return std::nullopt;
  }
  if (text.size() > 1 && text.front() == '0') {
    return std::nullopt;
  }
  BigUint out;
  for (char ch : text) {
    const unsigned digit = ch <= '9' ? static_cast<unsigned>(ch - '0') : static_cast<unsigned>(ch - 'a' + 10);
    out <<= 4;
    out += BigUint(digit);
  }
  return out;
}

}  // namespace fsgss
