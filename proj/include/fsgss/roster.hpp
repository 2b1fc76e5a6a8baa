#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsgss/bigint.hpp"
#include "fsgss/modmath.hpp"
#include "fsgss/random.hpp"

namespace fsgss {

struct KeyPair {
  BigUint x;  // secret, in [1, n)
  BigUint y;  // g2^x mod p0

  friend bool operator==(const KeyPair&, const KeyPair&) = default;
};

// Everything a verifier needs: the group and the manager's public key y0.
struct GroupPublicInfo {
  BigUint p0;
  BigUint n;
  BigUint g2;
  BigUint y0;

  GroupPublic Group() const { return {p0, n, g2}; }

  friend bool operator==(const GroupPublicInfo&, const GroupPublicInfo&) = default;
};

struct ScSetupResult {
  GroupPublic published;
  ScSecret secret;
};

ScSetupResult ScSetup(std::size_t bits, Rng& rng);

// Samples x uniformly in [1, n), redrawing the x that map to y = 1.
KeyPair MemberKeygen(const GroupPublic& group, Rng& rng);
KeyPair KeyPairFromSecret(const GroupPublic& group, const BigUint& x);

// Ids end up in whitespace-separated record files.
bool IsValidMemberId(std::string_view id);

// Registered (member_id, y) pairs in insertion order. The first entry is the
// group manager u0.
class Roster {
 public:
  struct Entry {
    std::string member_id;
    BigUint y;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  // Throws DuplicateMember, or DomainError for an id IsValidMemberId rejects.
  void Register(const std::string& member_id, const BigUint& y);

  std::optional<BigUint> Find(std::string_view member_id) const;
  bool Contains(std::string_view member_id) const { return Find(member_id).has_value(); }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Throws UnknownMember when empty.
  const Entry& manager() const;

  friend bool operator==(const Roster&, const Roster&) = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace fsgss
