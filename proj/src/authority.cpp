#include "fsgss/authority.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "fsgss/errors.hpp"
#include "fsgss/formats.hpp"
#include "fsgss/modmath.hpp"

namespace fsgss {
namespace {

constexpr std::array<std::string_view, 6> kRegistryFields = {"member", "k", "r1", "r2", "a", "s"};

}  // namespace

OpeningResult OpenSignature(const Signature& sig, std::span<const SessionRecord> registry,
                            const GroupPublicInfo& pub, SignMode mode) {
  if (!Verify(pub, sig)) {
    throw RefusedUnverified("refusing to open a signature that does not verify");
  }
  const BigUint& n = pub.n;
  const BigUint& p0 = pub.p0;
  const BigUint r5 = ModExp(pub.g2, sig.c, p0);

  OpeningResult result;
  for (const SessionRecord& record : registry) {
    const auto s_inv = ModInv(record.s, n);
    const auto r2_inv = ModInv(record.r2, n);
    if (!s_inv || !r2_inv) {
      result.diagnostics.push_back("session '" + record.member_id + "': s or r2 not invertible, skipped");
      continue;
    }
    const BigUint mu = sig.s1 * *s_inv % n;
    const auto mu_inv = ModInv(mu, n);
    if (!mu_inv) {
      result.diagnostics.push_back("session '" + record.member_id + "': multiplier not invertible, skipped");
      continue;
    }

    BigUint rho3;
    if (mode == SignMode::kRepaired) {
      rho3 = sig.r4 % n * *mu_inv % n;
    } else {
      // Literal signatures carry mu = r5 mod n with r5 = g2^c, so r3 = r4 / r5.
      if (mu != r5 % n) {
        continue;
      }
      rho3 = sig.r4 * ModInvOrThrow(r5, p0) % p0 % n;
    }
    BigUint b = rho3 * *r2_inv % n;

    const BigUint r3 = ModExp(pub.g2, record.k * b % n, p0);
    if (r3 % n != rho3) {
      continue;
    }
    if (r3 * r5 % p0 != sig.r4) {
      continue;
    }
    if ((b * record.a + sig.c * record.s) % n * mu % n != sig.r6) {
      continue;
    }
    result.matches.push_back({record.member_id, std::move(b), std::move(rho3)});
  }
  return result;
}

ForgeryOutcome ProveForgery(const BigUint& b, const BigUint& b_star, const BigUint& n) {
  if (n < BigUint(2)) {
    throw DomainError("modulus must be at least 2");
  }
  BigUint b_mod = b % n;
  BigUint b_star_mod = b_star % n;
  if (b_mod == b_star_mod) {
    return {ForgeryVerdict::kIndistinguishable, std::nullopt};
  }
  BigUint d = Gcd(AbsDiff(b_mod, b_star_mod), n);
  if (d == BigUint(1) || d == n) {
    return {ForgeryVerdict::kNoFactor, std::nullopt};
  }
  return {ForgeryVerdict::kProof, ForgeryProof{std::move(b_mod), std::move(b_star_mod), std::move(d)}};
}

std::string EncodeRegistryLine(const SessionRecord& record) {
  std::ostringstream out;
  out << "member=" << record.member_id << " k=" << record.k.ToHex() << " r1=" << record.r1.ToHex()
      << " r2=" << record.r2.ToHex() << " a=" << record.a.ToHex() << " s=" << record.s.ToHex() << '\n';
  return out.str();
}

SessionRecord DecodeRegistryLine(std::string_view line, std::size_t line_number) {
  std::array<std::string_view, kRegistryFields.size()> values;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < kRegistryFields.size(); ++i) {
    const bool last = i + 1 == kRegistryFields.size();
    const std::size_t end = last ? line.size() : line.find(' ', pos);
    if (end == std::string_view::npos) {
      throw ParseError("registry record is missing fields", line_number);
    }
    const std::string_view token = line.substr(pos, end - pos);
    const std::size_t eq = token.find('=');
    if (eq == std::string_view::npos || token.substr(0, eq) != kRegistryFields[i]) {
      throw ParseError("expected field '" + std::string(kRegistryFields[i]) + "'", line_number);
    }
    values[i] = token.substr(eq + 1);
    pos = end + 1;
  }

  if (!IsValidMemberId(values[0])) {
    throw ParseError("invalid member id", line_number);
  }
  SessionRecord record;
  record.member_id = std::string(values[0]);
  BigUint* targets[] = {&record.k, &record.r1, &record.r2, &record.a, &record.s};
  for (std::size_t i = 0; i < 5; ++i) {
    auto parsed = ParseCanonicalHex(values[i + 1]);
    if (!parsed) {
      throw ParseError("field '" + std::string(kRegistryFields[i + 1]) + "' is not canonical hex", line_number);
    }
    *targets[i] = std::move(*parsed);
  }
  return record;
}

std::string EncodeRegistry(std::span<const SessionRecord> records) {
  std::string out;
  for (const auto& record : records) {
    out += EncodeRegistryLine(record);
  }
  return out;
}

std::vector<SessionRecord> DecodeRegistry(std::string_view text) {
  std::vector<SessionRecord> records;
  std::size_t pos = 0;
  std::size_t line_number = 0;
  while (pos < text.size()) {
    ++line_number;
    const std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      throw ParseError("truncated record (no trailing newline)", line_number);
    }
    records.push_back(DecodeRegistryLine(text.substr(pos, end - pos), line_number));
    pos = end + 1;
  }
  return records;
}

void RegistryStore(const std::filesystem::path& path, std::span<const SessionRecord> records) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) {
    throw Error("cannot open registry " + path.string() + " for append");
  }
  const std::string text = EncodeRegistry(records);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw Error("failed writing registry " + path.string());
  }
}

std::vector<SessionRecord> RegistryLoad(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    return {};
  }
  return DecodeRegistry(ReadFile(path));
}

}  // namespace fsgss
