#include "fsgss/hash.hpp"

#include <openssl/evp.h>

#include "fsgss/errors.hpp"

namespace fsgss {

std::array<std::uint8_t, 32> Sha256(std::span<const std::uint8_t> bytes) {
  std::array<std::uint8_t, 32> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1 ||
      length != digest.size()) {
    throw Error("SHA-256 computation failed");
  }
  return digest;
}

BigUint HashMessage(std::span<const std::uint8_t> bytes, const BigUint& n) {
  const auto digest = Sha256(bytes);
  return BigUint::FromBigEndian(digest) % n;
}

BigUint HashMessage(std::string_view bytes, const BigUint& n) {
  return HashMessage(std::span(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()), n);
}

}  // namespace fsgss
