#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsgss/bigint.hpp"
#include "fsgss/handshake.hpp"
#include "fsgss/modmath.hpp"
#include "fsgss/roster.hpp"
#include "fsgss/signing.hpp"

namespace fsgss {

// Files are sequences of `name=<canonical hex>` lines in a fixed order, each
// newline-terminated. Decoders throw ParseError with the 1-based line number.

std::string EncodeFields(std::span<const std::string_view> names, std::span<const BigUint> values);
std::vector<BigUint> DecodeFields(std::string_view text, std::span<const std::string_view> names);

// params file: p0, n, g2
std::string EncodeParams(const GroupPublic& group);
GroupPublic DecodeParams(std::string_view text);

// SC secret file: p1, q1
std::string EncodeScSecret(const ScSecret& secret);
ScSecret DecodeScSecret(std::string_view text);

// group file: p0, n, g2, y0
std::string EncodeGroupInfo(const GroupPublicInfo& info);
GroupPublicInfo DecodeGroupInfo(std::string_view text);

// signature file: m, c, e_cap, r4, r6, s1, s2
std::string EncodeSignature(const Signature& sig);
Signature DecodeSignature(std::string_view text);

// key file: member=<id>, then x, y
struct MemberKeyFile {
  std::string member_id;
  KeyPair key;
};
std::string EncodeKeyFile(const MemberKeyFile& file);
MemberKeyFile DecodeKeyFile(std::string_view text);

// credential file: member=<id>, then b_prime, b, r1, r2, a, s
std::string EncodeCredential(const MemberCredential& credential);
MemberCredential DecodeCredential(std::string_view text, const GroupPublic& group);

// roster file: one `member=<id> y=<hex>` line per entry
std::string EncodeRoster(const Roster& roster);
Roster DecodeRoster(std::string_view text);

// Whole-file helpers; throw Error with the path on I/O failure.
std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace fsgss
