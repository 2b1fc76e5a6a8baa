#include "fsgss/formats.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "fsgss/errors.hpp"
#include "kv_lines.hpp"

namespace fsgss {
namespace {

constexpr std::array<std::string_view, 3> kParamsFields = {"p0", "n", "g2"};
constexpr std::array<std::string_view, 2> kSecretFields = {"p1", "q1"};
constexpr std::array<std::string_view, 4> kGroupFields = {"p0", "n", "g2", "y0"};
constexpr std::array<std::string_view, 7> kSignatureFields = {"m", "c", "e_cap", "r4", "r6", "s1", "s2"};
constexpr std::array<std::string_view, 2> kKeyFields = {"x", "y"};
constexpr std::array<std::string_view, 6> kCredentialFields = {"b_prime", "b", "r1", "r2", "a", "s"};

std::vector<BigUint> ExpectFields(std::span<const detail::KeyValueLine> lines,
                                  std::span<const std::string_view> names, std::size_t last_line) {
  if (lines.size() < names.size()) {
    throw ParseError("missing field '" + std::string(names[lines.size()]) + "'", last_line + 1);
  }
  if (lines.size() > names.size()) {
    throw ParseError("unexpected extra field '" + std::string(lines[names.size()].key) + "'",
                     lines[names.size()].line_number);
  }
  std::vector<BigUint> values;
  values.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    values.push_back(detail::ExpectHexField(lines[i], names[i]));
  }
  return values;
}

// Splits off a leading `member=<id>` line.
std::string ExpectMemberLine(const std::vector<detail::KeyValueLine>& lines) {
  if (lines.empty() || lines.front().key != "member") {
    throw ParseError("expected member=<id>", 1);
  }
  if (!IsValidMemberId(lines.front().value)) {
    throw ParseError("invalid member id", 1);
  }
  return std::string(lines.front().value);
}

}  // namespace

std::string EncodeFields(std::span<const std::string_view> names, std::span<const BigUint> values) {
  if (names.size() != values.size()) {
    throw DomainError("field name/value count mismatch");
  }
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    out += names[i];
    out += '=';
    out += values[i].ToHex();
    out += '\n';
  }
  return out;
}

std::vector<BigUint> DecodeFields(std::string_view text, std::span<const std::string_view> names) {
  const auto lines = detail::SplitKeyValueLines(text);
  return ExpectFields(lines, names, lines.empty() ? 0 : lines.back().line_number);
}

std::string EncodeParams(const GroupPublic& group) {
  const std::array values = {group.p0, group.n, group.g2};
  return EncodeFields(kParamsFields, values);
}

GroupPublic DecodeParams(std::string_view text) {
  auto v = DecodeFields(text, kParamsFields);
  return {std::move(v[0]), std::move(v[1]), std::move(v[2])};
}

std::string EncodeScSecret(const ScSecret& secret) {
  const std::array values = {secret.p1, secret.q1};
  return EncodeFields(kSecretFields, values);
}

ScSecret DecodeScSecret(std::string_view text) {
  auto v = DecodeFields(text, kSecretFields);
  return {std::move(v[0]), std::move(v[1])};
}

std::string EncodeGroupInfo(const GroupPublicInfo& info) {
  const std::array values = {info.p0, info.n, info.g2, info.y0};
  return EncodeFields(kGroupFields, values);
}

GroupPublicInfo DecodeGroupInfo(std::string_view text) {
  auto v = DecodeFields(text, kGroupFields);
  return {std::move(v[0]), std::move(v[1]), std::move(v[2]), std::move(v[3])};
}

std::string EncodeSignature(const Signature& sig) {
  const std::array values = {sig.m, sig.c, sig.e_cap, sig.r4, sig.r6, sig.s1, sig.s2};
  return EncodeFields(kSignatureFields, values);
}

Signature DecodeSignature(std::string_view text) {
  auto v = DecodeFields(text, kSignatureFields);
  return {std::move(v[0]), std::move(v[1]), std::move(v[2]), std::move(v[3]),
          std::move(v[4]), std::move(v[5]), std::move(v[6])};
}

std::string EncodeKeyFile(const MemberKeyFile& file) {
  const std::array values = {file.key.x, file.key.y};
  return "member=" + file.member_id + "\n" + EncodeFields(kKeyFields, values);
}

MemberKeyFile DecodeKeyFile(std::string_view text) {
  const auto lines = detail::SplitKeyValueLines(text);
  std::string member = ExpectMemberLine(lines);
  const std::span rest(lines.begin() + 1, lines.end());
  auto v = ExpectFields(rest, kKeyFields, lines.back().line_number);
  return {std::move(member), {std::move(v[0]), std::move(v[1])}};
}

std::string EncodeCredential(const MemberCredential& credential) {
  const std::array values = {credential.b_prime, credential.b, credential.r1,
                             credential.r2,      credential.a, credential.s};
  return "member=" + credential.member_id + "\n" + EncodeFields(kCredentialFields, values);
}

MemberCredential DecodeCredential(std::string_view text, const GroupPublic& group) {
  const auto lines = detail::SplitKeyValueLines(text);
  std::string member = ExpectMemberLine(lines);
  const std::span rest(lines.begin() + 1, lines.end());
  auto v = ExpectFields(rest, kCredentialFields, lines.back().line_number);
  return RestoreCredential(group, std::move(member), std::move(v[0]), std::move(v[1]), std::move(v[2]),
                           std::move(v[3]), std::move(v[4]), std::move(v[5]));
}

std::string EncodeRoster(const Roster& roster) {
  std::string out;
  for (const auto& entry : roster.entries()) {
    out += "member=" + entry.member_id + " y=" + entry.y.ToHex() + "\n";
  }
  return out;
}

Roster DecodeRoster(std::string_view text) {
  Roster roster;
  for (const auto& line : detail::SplitKeyValueLines(text)) {
    if (line.key != "member") {
      throw ParseError("expected member=<id> y=<hex>", line.line_number);
    }
    // SplitKeyValueLines cut at the first '=', so value is "<id> y=<hex>".
    const std::size_t space = line.value.find(' ');
    if (space == std::string_view::npos) {
      throw ParseError("missing y field", line.line_number);
    }
    const std::string id(line.value.substr(0, space));
    const std::string_view y_field = line.value.substr(space + 1);
    if (!y_field.starts_with("y=")) {
      throw ParseError("missing y field", line.line_number);
    }
    const auto y = ParseCanonicalHex(y_field.substr(2));
    if (!y) {
      throw ParseError("field 'y' is not canonical hex", line.line_number);
    }
    if (!IsValidMemberId(id)) {
      throw ParseError("invalid member id", line.line_number);
    }
    if (roster.Contains(id)) {
      throw ParseError("duplicate member '" + id + "'", line.line_number);
    }
    roster.Register(id, *y);
  }
  return roster;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot write " + path.string());
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) {
    throw Error("failed writing " + path.string());
  }
}

}  // namespace fsgss
