#include "fsgss/roster.hpp"

#include <algorithm>

#include "fsgss/errors.hpp"

namespace fsgss {

ScSetupResult ScSetup(std::size_t bits, Rng& rng) {
  const GroupPrimes primes = GenGroupPrimes(bits, rng);
  GroupParams params{primes.p0, primes.p1, primes.q1, primes.p1 * primes.q1, BigUint()};
  params.g2 = FindSubgroupGenerator(params.p0, params.p1, rng);
  params.Validate();
  return {params.Public(), params.Secret()};
}

KeyPair MemberKeygen(const GroupPublic& group, Rng& rng) {
  // x with g2^x = 1 would publish y = 1; every other residue is kept.
  while (true) {
    BigUint x = rng.InRange(BigUint(1), group.n);
    BigUint y = ModExp(group.g2, x, group.p0);
    if (y != BigUint(1)) {
      return {std::move(x), std::move(y)};
    }
  }
}

KeyPair KeyPairFromSecret(const GroupPublic& group, const BigUint& x) {
  if (x.IsZero() || x >= group.n) {
    throw DomainError("secret exponent must lie in [1, n)");
  }
  return {x, ModExp(group.g2, x, group.p0)};
}

bool IsValidMemberId(std::string_view id) {
  if (id.empty() || id.size() > 64) {
    return false;
  }
  return std::all_of(id.begin(), id.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_' ||
           ch == '-' || ch == '.';
  });
}

void Roster::Register(const std::string& member_id, const BigUint& y) {
  if (!IsValidMemberId(member_id)) {
    throw DomainError("invalid member id '" + member_id + "'");
  }
  if (Contains(member_id)) {
    throw DuplicateMember("member '" + member_id + "' is already registered");
  }
  entries_.push_back({member_id, y});
}

std::optional<BigUint> Roster::Find(std::string_view member_id) const {
  for (const auto& entry : entries_) {
    if (entry.member_id == member_id) {
      return entry.y;
    }
  }
  return std::nullopt;
}

const Roster::Entry& Roster::manager() const {
  if (entries_.empty()) {
    throw UnknownMember("roster is empty; no manager registered");
  }
  return entries_.front();
}

}  // namespace fsgss
