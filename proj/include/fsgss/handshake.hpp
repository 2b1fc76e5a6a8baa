#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsgss/bigint.hpp"
#include "fsgss/random.hpp"
#include "fsgss/roster.hpp"

namespace fsgss {

inline constexpr std::size_t kResampleBudget = 64;

// Handshake messages, in protocol order: REQ -> R1 -> R2 -> AS.
struct EnrollRequest {};
struct R1Message {
  BigUint r1;
};
struct R2Message {
  BigUint r2;
};
struct IssueMessage {
  BigUint a;
  BigUint s;
};

// Manager-side persisted issuance record. Holds nothing of the member's secrets.
struct SessionRecord {
  std::string member_id;
  BigUint k;
  BigUint r1;
  BigUint r2;
  BigUint a;
  BigUint s;

  friend bool operator==(const SessionRecord&, const SessionRecord&) = default;
};

// A member's signing material after a completed handshake. r3 and rho3 are
// derived from (r1, b) and are not persisted.
struct MemberCredential {
  std::string member_id;
  BigUint b_prime;
  BigUint b;
  BigUint r1;
  BigUint r3;
  BigUint rho3;
  BigUint r2;
  BigUint a;
  BigUint s;

  friend bool operator==(const MemberCredential&, const MemberCredential&) = default;
};

// Rebuilds r3 = r1^b mod p0 and rho3 = r3 mod n from the stored fields.
MemberCredential RestoreCredential(const GroupPublic& group, std::string member_id, BigUint b_prime,
                                   BigUint b, BigUint r1, BigUint r2, BigUint a, BigUint s);

// g2^(b*a mod n) == y0^rho3 * r3^s (mod p0).
bool CredentialCheck(const GroupPublicInfo& pub, const MemberCredential& credential);

// One issuance on the manager side.
class ManagerSession {
 public:
  enum class State { kAwaitBegin, kAwaitR2, kDone };

  ManagerSession(GroupPublicInfo pub, BigUint x0, std::string member_id);

  // Draws k in [1, n) with r1 = g2^k != 1.
  R1Message Begin(Rng& rng);
  // Throws DomainError when k is out of range or gives r1 = 1.
  R1Message BeginWithNonce(const BigUint& k);

  // Draws s in [1, n) coprime to n; a = x0*r2 + k*s mod n.
  IssueMessage Issue(const R2Message& message, Rng& rng);
  // Throws NotInvertible when gcd(s, n) != 1.
  IssueMessage IssueWithScalar(const R2Message& message, const BigUint& s);

  State state() const { return state_; }
  const std::string& member_id() const { return member_id_; }
  // Throws ProtocolError before Issue.
  const SessionRecord& record() const;

 private:
  void Expect(State expected, const char* step) const;

  GroupPublicInfo pub_;
  BigUint x0_;
  std::string member_id_;
  BigUint k_;
  BigUint r1_;
  std::optional<SessionRecord> record_;
  State state_ = State::kAwaitBegin;
};

// One enrollment on the member side.
class MemberEnrollment {
 public:
  enum class State { kAwaitRequest, kAwaitR1, kAwaitIssue, kDone };

  MemberEnrollment(GroupPublicInfo pub, std::string member_id);

  EnrollRequest Request();

  // Draws b' until b = g2^b' and rho3 are both units mod n and r3 != 1.
  // Throws GenerationFailed after kResampleBudget draws.
  R2Message Respond(const R1Message& message, Rng& rng);
  // Throws NotInvertible when b' gives a non-unit b or rho3, DegenerateDraw
  // when r3 = 1.
  R2Message RespondWithSecret(const R1Message& message, const BigUint& b_prime);

  // Throws CredentialInvalid when the credential check fails.
  MemberCredential Finalize(const IssueMessage& message);

  State state() const { return state_; }

 private:
  void Expect(State expected, const char* step) const;

  GroupPublicInfo pub_;
  std::string member_id_;
  MemberCredential pending_;
  State state_ = State::kAwaitRequest;
};

// The manager u0: its key, the roster, pending sessions and the issued records.
class GroupManager {
 public:
  GroupManager(GroupPublic group, KeyPair key, Roster roster);

  GroupPublicInfo public_info() const { return {group_.p0, group_.n, group_.g2, key_.y}; }
  const KeyPair& key() const { return key_; }
  const Roster& roster() const { return roster_; }
  const std::vector<SessionRecord>& records() const { return records_; }

  // Throws UnknownMember for an unregistered id, ProtocolError when a session
  // for the member is already pending.
  R1Message Begin(const std::string& member_id, Rng& rng);
  // Throws ProtocolError without a pending session.
  IssueMessage Issue(const std::string& member_id, const R2Message& message, Rng& rng);

 private:
  GroupPublic group_;
  KeyPair key_;
  Roster roster_;
  std::map<std::string, ManagerSession> pending_;
  std::vector<SessionRecord> records_;
};

}  // namespace fsgss
