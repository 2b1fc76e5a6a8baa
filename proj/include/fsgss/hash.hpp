#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "fsgss/bigint.hpp"

namespace fsgss {

std::array<std::uint8_t, 32> Sha256(std::span<const std::uint8_t> bytes);

// SHA-256 of the bytes as a big-endian integer, reduced mod n.
BigUint HashMessage(std::span<const std::uint8_t> bytes, const BigUint& n);
BigUint HashMessage(std::string_view bytes, const BigUint& n);

}  // namespace fsgss
