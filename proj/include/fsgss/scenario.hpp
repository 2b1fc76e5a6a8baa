#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsgss/bus.hpp"
#include "fsgss/handshake.hpp"
#include "fsgss/random.hpp"
#include "fsgss/roster.hpp"
#include "fsgss/signing.hpp"

namespace fsgss {

// Protocol roles. Each keeps only what it legitimately holds, and
// SerializeState() dumps that as `name=value` lines for knowledge audits.

class SystemCenter {
 public:
  explicit SystemCenter(GroupParams params);

  const GroupParams& params() const { return params_; }
  GroupPublic published() const { return params_.Public(); }
  const Roster& roster() const { return roster_; }
  void Register(const std::string& member_id, const BigUint& y) { roster_.Register(member_id, y); }

  std::string SerializeState() const;

 private:
  GroupParams params_;
  Roster roster_;
};

class MemberParty {
 public:
  MemberParty(std::string member_id, GroupPublic group, KeyPair key);

  const std::string& id() const { return id_; }
  const KeyPair& key() const { return key_; }

  // The manager's y0 becomes known once enrollment starts.
  void SetGroupInfo(GroupPublicInfo info) { info_ = std::move(info); }
  const std::optional<GroupPublicInfo>& group_info() const { return info_; }

  void SetCredential(MemberCredential credential) { credential_ = std::move(credential); }
  // Throws ProtocolError before enrollment completed.
  const MemberCredential& credential() const;
  bool enrolled() const { return credential_.has_value(); }

  Signature SignAndRecord(const BigUint& m, SignMode mode, Rng& rng);

  std::string SerializeState() const;

 private:
  std::string id_;
  GroupPublic group_;
  KeyPair key_;
  std::optional<GroupPublicInfo> info_;
  std::optional<MemberCredential> credential_;
  std::vector<Signature> sent_;
};

class ManagerParty {
 public:
  ManagerParty(std::string member_id, GroupManager manager);

  const std::string& id() const { return id_; }
  GroupManager& manager() { return manager_; }
  const GroupManager& manager() const { return manager_; }

  std::string SerializeState() const;

 private:
  std::string id_;
  GroupManager manager_;
};

class RecipientParty {
 public:
  explicit RecipientParty(GroupPublicInfo info) : info_(std::move(info)) {}

  // Verifies and keeps the signature. Malformed signatures count as rejected.
  bool Accept(const Signature& sig);

  std::string SerializeState() const;

 private:
  GroupPublicInfo info_;
  std::vector<Signature> received_;
};

// Runs REQ -> R1 -> R2 -> AS between the two parties over the bus and stores
// the credential in the member.
void EnrollOverBus(ManagerParty& manager, MemberParty& member, MessageBus& bus, Rng& manager_rng,
                   Rng& member_rng);

// A fully set up desk-scale group: SC, manager u0 and `members` enrolled members.
struct DeskGroup {
  SystemCenter sc;
  ManagerParty manager;
  std::vector<MemberParty> members;
  RecipientParty recipient;
  MessageBus bus;
};

DeskGroup BuildDeskGroup(std::size_t members, Rng& rng);

struct ScenarioConfig {
  std::string name;  // honest | maul | dlp-forge | failstop
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  SignMode mode = SignMode::kRepaired;
};

struct ScenarioReport {
  std::string scenario;
  SignMode mode = SignMode::kRepaired;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t passed = 0;  // signatures the recipient accepted
  std::size_t failed = 0;
  std::optional<std::size_t> predicate_agreements;  // honest/literal only
  std::optional<std::size_t> attributed;            // forged signatures the manager opened to a session
  std::optional<std::size_t> collisions;            // failstop only
  std::optional<std::size_t> factors_found;         // failstop only

  double pass_rate() const { return trials == 0 ? 0.0 : static_cast<double>(passed) / trials; }
  std::optional<double> collision_rate() const;
};

bool IsKnownScenario(std::string_view name);

// Deterministic in the config. Throws DomainError for an unknown scenario.
ScenarioReport RunScenario(const ScenarioConfig& config);

std::string FormatReport(const ScenarioReport& report);

}  // namespace fsgss
