#include "fsgss/handshake.hpp"

#include <string>

#include "fsgss/errors.hpp"

namespace fsgss {
namespace {

void RequireBelow(const BigUint& value, const BigUint& bound, const char* what) {
  if (value >= bound) {
    throw DomainError(std::string(what) + " out of range");
  }
}

}  // namespace

MemberCredential RestoreCredential(const GroupPublic& group, std::string member_id, BigUint b_prime, BigUint b,
                                   BigUint r1, BigUint r2, BigUint a, BigUint s) {
  BigUint r3 = ModExp(r1, b, group.p0);
  BigUint rho3 = r3 % group.n;
  return {std::move(member_id), std::move(b_prime), std::move(b), std::move(r1), std::move(r3),
          std::move(rho3),      std::move(r2),      std::move(a), std::move(s)};
}

bool CredentialCheck(const GroupPublicInfo& pub, const MemberCredential& credential) {
  const BigUint lhs = ModExp(pub.g2, credential.b * credential.a % pub.n, pub.p0);
  const BigUint rhs = ModExp(pub.y0, credential.rho3, pub.p0) * ModExp(credential.r3, credential.s, pub.p0) % pub.p0;
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// ManagerSession

ManagerSession::ManagerSession(GroupPublicInfo pub, BigUint x0, std::string member_id)
    : pub_(std::move(pub)), x0_(std::move(x0)), member_id_(std::move(member_id)) {}

void ManagerSession::Expect(State expected, const char* step) const {
  if (state_ != expected) {
    throw ProtocolError(std::string("manager session for '") + member_id_ + "': unexpected " + step);
  }
}

R1Message ManagerSession::Begin(Rng& rng) {
  Expect(State::kAwaitBegin, "REQ");
  for (std::size_t attempt = 0; attempt < kResampleBudget; ++attempt) {
    BigUint k = rng.InRange(BigUint(1), pub_.n);
    if (ModExp(pub_.g2, k, pub_.p0) != BigUint(1)) {
      return BeginWithNonce(k);
    }
  }
  throw GenerationFailed("no usable session nonce k");
}

R1Message ManagerSession::BeginWithNonce(const BigUint& k) {
  Expect(State::kAwaitBegin, "REQ");
  if (k.IsZero() || k >= pub_.n) {
    throw DomainError("session nonce k must lie in [1, n)");
  }
  BigUint r1 = ModExp(pub_.g2, k, pub_.p0);
  if (r1 == BigUint(1)) {
    throw DomainError("session nonce k gives r1 = 1");
  }
  k_ = k;
  r1_ = r1;
  state_ = State::kAwaitR2;
  return {std::move(r1)};
}

IssueMessage ManagerSession::Issue(const R2Message& message, Rng& rng) {
  Expect(State::kAwaitR2, "R2");
  for (std::size_t attempt = 0; attempt < kResampleBudget; ++attempt) {
    const BigUint s = rng.InRange(BigUint(1), pub_.n);
    if (Gcd(s, pub_.n) == BigUint(1)) {
      return IssueWithScalar(message, s);
    }
  }
  throw GenerationFailed("no unit s found within the resample budget");
}

IssueMessage ManagerSession::IssueWithScalar(const R2Message& message, const BigUint& s) {
  Expect(State::kAwaitR2, "R2");
  RequireBelow(message.r2, pub_.n, "r2");
  if (s.IsZero() || s >= pub_.n) {
    throw DomainError("s must lie in [1, n)");
  }
  if (Gcd(s, pub_.n) != BigUint(1)) {
    throw NotInvertible("s is not a unit modulo n");
  }
  BigUint a = (x0_ * message.r2 + k_ * s) % pub_.n;
  record_ = SessionRecord{member_id_, k_, r1_, message.r2, a, s};
  state_ = State::kDone;
  return {std::move(a), s};
}

const SessionRecord& ManagerSession::record() const {
  if (!record_) {
    throw ProtocolError("session for '" + member_id_ + "' has not issued yet");
  }
  return *record_;
}

// ---------------------------------------------------------------------------
// MemberEnrollment

MemberEnrollment::MemberEnrollment(GroupPublicInfo pub, std::string member_id)
    : pub_(std::move(pub)), member_id_(std::move(member_id)) {
  pending_.member_id = member_id_;
}

void MemberEnrollment::Expect(State expected, const char* step) const {
  if (state_ != expected) {
    throw ProtocolError("enrollment of '" + member_id_ + "': unexpected " + step);
  }
}

EnrollRequest MemberEnrollment::Request() {
  Expect(State::kAwaitRequest, "request");
  state_ = State::kAwaitR1;
  return {};
}

R2Message MemberEnrollment::Respond(const R1Message& message, Rng& rng) {
  Expect(State::kAwaitR1, "R1");
  if (message.r1.IsZero() || message.r1 >= pub_.p0) {
    throw DomainError("r1 must lie in [1, p0)");
  }
  for (std::size_t attempt = 0; attempt < kResampleBudget; ++attempt) {
    const BigUint b_prime = rng.InRange(BigUint(1), pub_.n);
    try {
      return RespondWithSecret(message, b_prime);
    } catch (const NotInvertible&) {
      continue;
    } catch (const DegenerateDraw&) {
      continue;
    }
  }
  throw GenerationFailed("no usable b' within the resample budget");
}

R2Message MemberEnrollment::RespondWithSecret(const R1Message& message, const BigUint& b_prime) {
  Expect(State::kAwaitR1, "R1");
  if (message.r1.IsZero() || message.r1 >= pub_.p0) {
    throw DomainError("r1 must lie in [1, p0)");
  }
  if (b_prime.IsZero() || b_prime >= pub_.n) {
    throw DomainError("b' must lie in [1, n)");
  }
  BigUint b = ModExp(pub_.g2, b_prime, pub_.p0);
  const auto b_inv = ModInv(b, pub_.n);
  if (!b_inv) {
    throw NotInvertible("b is not a unit modulo n");
  }
  BigUint r3 = ModExp(message.r1, b, pub_.p0);
  if (r3 == BigUint(1)) {
    throw DegenerateDraw("b' gives r3 = 1");
  }
  BigUint rho3 = r3 % pub_.n;
  if (Gcd(rho3, pub_.n) != BigUint(1)) {
    throw NotInvertible("rho3 is not a unit modulo n");
  }
  BigUint r2 = rho3 * *b_inv % pub_.n;

  pending_.b_prime = b_prime;
  pending_.b = std::move(b);
  pending_.r1 = message.r1;
  pending_.r3 = std::move(r3);
  pending_.rho3 = std::move(rho3);
  pending_.r2 = r2;
  state_ = State::kAwaitIssue;
  return {std::move(r2)};
}

MemberCredential MemberEnrollment::Finalize(const IssueMessage& message) {
  Expect(State::kAwaitIssue, "AS");
  if (message.a >= pub_.n || message.s.IsZero() || message.s >= pub_.n) {
    throw CredentialInvalid("issued scalars out of range");
  }
  MemberCredential credential = pending_;
  credential.a = message.a;
  credential.s = message.s;
  if (!CredentialCheck(pub_, credential)) {
    throw CredentialInvalid("credential check failed for '" + member_id_ + "'");
  }
  state_ = State::kDone;
  return credential;
}

// ---------------------------------------------------------------------------
// GroupManager

GroupManager::GroupManager(GroupPublic group, KeyPair key, Roster roster)
    : group_(std::move(group)), key_(std::move(key)), roster_(std::move(roster)) {}

R1Message GroupManager::Begin(const std::string& member_id, Rng& rng) {
  if (!roster_.Contains(member_id)) {
    throw UnknownMember("member '" + member_id + "' is not registered");
  }
  if (pending_.contains(member_id)) {
    throw ProtocolError("a session for '" + member_id + "' is already pending");
  }
  ManagerSession session(public_info(), key_.x, member_id);
  R1Message r1 = session.Begin(rng);
  pending_.emplace(member_id, std::move(session));
  return r1;
}

IssueMessage GroupManager::Issue(const std::string& member_id, const R2Message& message, Rng& rng) {
  auto it = pending_.find(member_id);
  if (it == pending_.end()) {
    throw ProtocolError("no pending session for '" + member_id + "'");
  }
  IssueMessage issued = it->second.Issue(message, rng);
  records_.push_back(it->second.record());
  pending_.erase(it);
  return issued;
}

}  // namespace fsgss
