#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsgss/bigint.hpp"
#include "fsgss/handshake.hpp"
#include "fsgss/signing.hpp"

namespace fsgss {

struct OpeningMatch {
  std::string member_id;
  BigUint b;     // recovered, mod n
  BigUint rho3;  // recovered, mod n

  friend bool operator==(const OpeningMatch&, const OpeningMatch&) = default;
};

struct OpeningResult {
  std::vector<OpeningMatch> matches;
  std::vector<std::string> diagnostics;  // one per skipped session
};

// Links a verified signature to the issuance sessions that could have produced
// it. Per session: recover mu, rho3 and b = rho3 * r2^-1 mod n, then accept when
//   r3' = g2^(k*b) mod p0 satisfies r3' mod n == rho3,
//   r3' * g2^c == r4 (mod p0), and
//   r6 == (b*a + c*s) * mu (mod n).
// Throws RefusedUnverified when the signature does not verify.
OpeningResult OpenSignature(const Signature& sig, std::span<const SessionRecord> registry,
                            const GroupPublicInfo& pub, SignMode mode);

struct ForgeryProof {
  BigUint b;
  BigUint b_star;
  BigUint factor;
};

enum class ForgeryVerdict { kProof, kIndistinguishable, kNoFactor };

struct ForgeryOutcome {
  ForgeryVerdict verdict;
  std::optional<ForgeryProof> proof;  // set iff verdict == kProof
};

// d = gcd(|b - b_star|, n). b == b_star is indistinguishable; d in {1, n} means
// the two values are not representations of one exponent.
ForgeryOutcome ProveForgery(const BigUint& b, const BigUint& b_star, const BigUint& n);

// Registry file: one record per line,
//   member=<id> k=<hex> r1=<hex> r2=<hex> a=<hex> s=<hex>
std::string EncodeRegistryLine(const SessionRecord& record);
// Throws ParseError carrying `line_number`.
SessionRecord DecodeRegistryLine(std::string_view line, std::size_t line_number = 0);

std::string EncodeRegistry(std::span<const SessionRecord> records);
// Every line must be newline-terminated; a truncated final line is a ParseError.
std::vector<SessionRecord> DecodeRegistry(std::string_view text);

// Appends without touching existing lines.
void RegistryStore(const std::filesystem::path& path, std::span<const SessionRecord> records);
// A missing file is an empty registry.
std::vector<SessionRecord> RegistryLoad(const std::filesystem::path& path);

}  // namespace fsgss
