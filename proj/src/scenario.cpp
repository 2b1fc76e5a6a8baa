#include "fsgss/scenario.hpp"

#include <cstdio>

#include "fsgss/adversary.hpp"
#include "fsgss/authority.hpp"
#include "fsgss/errors.hpp"

namespace fsgss {
namespace {

constexpr const char* kRecipientId = "R";
constexpr const char* kManagerId = "u0";
constexpr std::size_t kDeskMembers = 5;

void AppendField(std::string& out, std::string_view name, const BigUint& value) {
  out += name;
  out += '=';
  out += value.ToHex();
  out += '\n';
}

void AppendGroup(std::string& out, const GroupPublic& group) {
  AppendField(out, "p0", group.p0);
  AppendField(out, "n", group.n);
  AppendField(out, "g2", group.g2);
}

void AppendSignature(std::string& out, const Signature& sig) {
  AppendField(out, "m", sig.m);
  AppendField(out, "c", sig.c);
  AppendField(out, "e_cap", sig.e_cap);
  AppendField(out, "r4", sig.r4);
  AppendField(out, "r6", sig.r6);
  AppendField(out, "s1", sig.s1);
  AppendField(out, "s2", sig.s2);
}

void ExpectMessage(const Envelope& envelope, MessageType type) {
  if (envelope.message.type != type) {
    throw ProtocolError("expected " + std::string(ToString(type)) + " from '" + envelope.from + "', got " +
                        std::string(ToString(envelope.message.type)));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Roles

SystemCenter::SystemCenter(GroupParams params) : params_(std::move(params)) { params_.Validate(); }

std::string SystemCenter::SerializeState() const {
  std::string out;
  AppendGroup(out, params_.Public());
  AppendField(out, "p1", params_.p1);
  AppendField(out, "q1", params_.q1);
  for (const auto& entry : roster_.entries()) {
    out += "member=" + entry.member_id + "\n";
    AppendField(out, "y", entry.y);
  }
  return out;
}

MemberParty::MemberParty(std::string member_id, GroupPublic group, KeyPair key)
    : id_(std::move(member_id)), group_(std::move(group)), key_(std::move(key)) {}

const MemberCredential& MemberParty::credential() const {
  if (!credential_) {
    throw ProtocolError("member '" + id_ + "' is not enrolled");
  }
  return *credential_;
}

Signature MemberParty::SignAndRecord(const BigUint& m, SignMode mode, Rng& rng) {
  if (!info_) {
    throw ProtocolError("member '" + id_ + "' has no group information");
  }
  Signature sig = Sign(credential(), *info_, m, mode, rng);
  sent_.push_back(sig);
  return sig;
}

std::string MemberParty::SerializeState() const {
  std::string out;
  AppendGroup(out, group_);
  if (info_) {
    AppendField(out, "y0", info_->y0);
  }
  out += "member=" + id_ + "\n";
  AppendField(out, "x", key_.x);
  AppendField(out, "y", key_.y);
  if (credential_) {
    AppendField(out, "b_prime", credential_->b_prime);
    AppendField(out, "b", credential_->b);
    AppendField(out, "r1", credential_->r1);
    AppendField(out, "r2", credential_->r2);
    AppendField(out, "a", credential_->a);
    AppendField(out, "s", credential_->s);
  }
  for (const auto& sig : sent_) {
    AppendSignature(out, sig);
  }
  return out;
}

ManagerParty::ManagerParty(std::string member_id, GroupManager manager)
    : id_(std::move(member_id)), manager_(std::move(manager)) {}

std::string ManagerParty::SerializeState() const {
  std::string out;
  const GroupPublicInfo info = manager_.public_info();
  AppendGroup(out, info.Group());
  AppendField(out, "x", manager_.key().x);
  AppendField(out, "y0", info.y0);
  for (const auto& entry : manager_.roster().entries()) {
    out += "member=" + entry.member_id + "\n";
    AppendField(out, "y", entry.y);
  }
  for (const auto& record : manager_.records()) {
    out += "member=" + record.member_id + "\n";
    AppendField(out, "k", record.k);
    AppendField(out, "r1", record.r1);
    AppendField(out, "r2", record.r2);
    AppendField(out, "a", record.a);
    AppendField(out, "s", record.s);
  }
  return out;
}

bool RecipientParty::Accept(const Signature& sig) {
  bool ok = false;
  try {
    ok = Verify(info_, sig);
  } catch (const MalformedSignature&) {
    ok = false;
  }
  if (ok) {
    received_.push_back(sig);
  }
  return ok;
}

std::string RecipientParty::SerializeState() const {
  std::string out;
  AppendGroup(out, info_.Group());
  AppendField(out, "y0", info_.y0);
  for (const auto& sig : received_) {
    AppendSignature(out, sig);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enrollment and group construction

void EnrollOverBus(ManagerParty& manager, MemberParty& member, MessageBus& bus, Rng& manager_rng,
                   Rng& member_rng) {
  const GroupPublicInfo info = manager.manager().public_info();
  member.SetGroupInfo(info);
  MemberEnrollment enrollment(info, member.id());

  bus.Send({member.id(), manager.id(), ToWire(enrollment.Request())});

  Envelope request = bus.ReceiveOrThrow(manager.id());
  ExpectMessage(request, MessageType::kReq);
  const R1Message r1 = manager.manager().Begin(request.from, manager_rng);
  bus.Send({manager.id(), request.from, ToWire(r1)});

  const R2Message r2 = enrollment.Respond(R1FromWire(bus.ReceiveOrThrow(member.id()).message), member_rng);
  bus.Send({member.id(), manager.id(), ToWire(r2)});

  Envelope response = bus.ReceiveOrThrow(manager.id());
  const IssueMessage issued = manager.manager().Issue(response.from, R2FromWire(response.message), manager_rng);
  bus.Send({manager.id(), response.from, ToWire(issued)});

  member.SetCredential(enrollment.Finalize(IssueFromWire(bus.ReceiveOrThrow(member.id()).message)));
}

DeskGroup BuildDeskGroup(std::size_t members, Rng& rng) {
  SystemCenter sc(DeskParams());
  const GroupPublic group = sc.published();

  const KeyPair manager_key = MemberKeygen(group, rng);
  sc.Register(kManagerId, manager_key.y);
  std::vector<MemberParty> parties;
  for (std::size_t i = 1; i <= members; ++i) {
    const std::string id = "u" + std::to_string(i);
    KeyPair key = MemberKeygen(group, rng);
    sc.Register(id, key.y);
    parties.emplace_back(id, group, std::move(key));
  }

  ManagerParty manager(kManagerId, GroupManager(group, manager_key, sc.roster()));
  RecipientParty recipient(manager.manager().public_info());
  MessageBus bus;
  Rng manager_rng = rng.Fork();
  for (auto& party : parties) {
    Rng member_rng = rng.Fork();
    EnrollOverBus(manager, party, bus, manager_rng, member_rng);
  }
  return {std::move(sc), std::move(manager), std::move(parties), std::move(recipient), std::move(bus)};
}

// ---------------------------------------------------------------------------
// Scenarios

std::optional<double> ScenarioReport::collision_rate() const {
  if (!collisions || trials == 0) {
    return std::nullopt;
  }
  return static_cast<double>(*collisions) / static_cast<double>(trials);
}

bool IsKnownScenario(std::string_view name) {
  return name == "honest" || name == "maul" || name == "dlp-forge" || name == "failstop";
}

namespace {

// Honest members sign random messages and the recipient verifies over the bus.
void RunHonest(DeskGroup& g, const ScenarioConfig& config, Rng& rng, ScenarioReport& report) {
  const GroupPublicInfo info = g.manager.manager().public_info();
  const BigUint& p1 = g.sc.params().p1;
  std::size_t agreements = 0;
  for (std::size_t t = 0; t < config.trials; ++t) {
    MemberParty& member = g.members[rng.Below(g.members.size()).ToU64()];
    const Signature sig = member.SignAndRecord(rng.Below(info.n), config.mode, rng);
    g.bus.Send({member.id(), kRecipientId, ToWire(sig)});
    const bool ok = g.recipient.Accept(SignatureFromWire(g.bus.ReceiveOrThrow(kRecipientId).message));
    ok ? ++report.passed : ++report.failed;

    const BigUint r5 = ModExp(info.g2, sig.c, info.p0);
    const bool predicate = sig.r4 % p1 == member.credential().rho3 * r5 % p1;
    agreements += predicate == ok ? 1 : 0;
  }
  if (config.mode == SignMode::kLiteral) {
    report.predicate_agreements = agreements;
  }
}

// The adversary rewrites every valid signature in flight to a fresh message.
void RunMaul(DeskGroup& g, const ScenarioConfig& config, Rng& rng, ScenarioReport& report) {
  const GroupPublicInfo info = g.manager.manager().public_info();
  Rng adversary_rng = rng.Fork();
  g.bus.AddInterceptor([&](Envelope envelope) -> std::optional<Envelope> {
    if (envelope.message.type != MessageType::kSig) {
      return envelope;
    }
    const Signature intercepted = SignatureFromWire(envelope.message);
    if (!Verify(info, intercepted)) {
      return envelope;
    }
    const BigUint m_star = adversary_rng.Below(info.n);
    envelope.message = ToWire(ForgeReuse(intercepted, m_star, info, adversary_rng));
    return envelope;
  });

  std::size_t attributed = 0;
  for (std::size_t t = 0; t < config.trials; ++t) {
    MemberParty& member = g.members[rng.Below(g.members.size()).ToU64()];
    const Signature sig = member.SignAndRecord(rng.Below(info.n), config.mode, rng);
    g.bus.Send({member.id(), kRecipientId, ToWire(sig)});
    const Signature received = SignatureFromWire(g.bus.ReceiveOrThrow(kRecipientId).message);
    if (g.recipient.Accept(received)) {
      ++report.passed;
      if (!OpenSignature(received, g.manager.manager().records(), info, config.mode).matches.empty()) {
        ++attributed;
      }
    } else {
      ++report.failed;
    }
  }
  g.bus.ClearInterceptors();
  report.attributed = attributed;
}

// Forgeries from a discrete-log oracle, checked by the recipient and opened by the manager.
void RunDlpForge(DeskGroup& g, const ScenarioConfig& config, Rng& rng, ScenarioReport& report) {
  const GroupPublicInfo info = g.manager.manager().public_info();
  const DlpOracle oracle(info.Group());
  std::size_t attributed = 0;
  for (std::size_t t = 0; t < config.trials; ++t) {
    const Signature forged = ForgeWithDlp(rng.Below(info.n), info, oracle, rng);
    g.bus.Send({"A", kRecipientId, ToWire(forged)});
    const Signature received = SignatureFromWire(g.bus.ReceiveOrThrow(kRecipientId).message);
    if (g.recipient.Accept(received)) {
      ++report.passed;
      if (!OpenSignature(received, g.manager.manager().records(), info, SignMode::kRepaired).matches.empty()) {
        ++attributed;
      }
    } else {
      ++report.failed;
    }
  }
  report.attributed = attributed;
}

void RunFailstop(DeskGroup& g, const ScenarioConfig& config, Rng& rng, ScenarioReport& report) {
  const GroupPublicInfo info = g.manager.manager().public_info();
  const DlpOracle oracle(info.Group());
  const GroupParams& params = g.sc.params();
  std::size_t collisions = 0;
  std::size_t factors = 0;
  for (std::size_t t = 0; t < config.trials; ++t) {
    const MemberParty& member = g.members[rng.Below(g.members.size()).ToU64()];
    const FailstopTrialResult trial = RunFailstopTrial(member.credential(), info, oracle, rng);
    bool consistent = false;
    if (trial.collided) {
      ++collisions;
      consistent = !trial.factor.has_value();
    } else if (trial.factor) {
      ++factors;
      consistent = *trial.factor == params.p1 || *trial.factor == params.q1;
    }
    consistent ? ++report.passed : ++report.failed;
  }
  report.collisions = collisions;
  report.factors_found = factors;
}

}  // namespace

ScenarioReport RunScenario(const ScenarioConfig& config) {
  if (!IsKnownScenario(config.name)) {
    throw DomainError("unknown scenario '" + config.name + "'");
  }
  Rng rng(config.seed);
  DeskGroup group = BuildDeskGroup(kDeskMembers, rng);

  ScenarioReport report;
  report.scenario = config.name;
  report.mode = config.mode;
  report.seed = config.seed;
  report.trials = config.trials;
  if (config.name == "honest") {
    RunHonest(group, config, rng, report);
  } else if (config.name == "maul") {
    RunMaul(group, config, rng, report);
  } else if (config.name == "dlp-forge") {
    RunDlpForge(group, config, rng, report);
  } else {
    RunFailstop(group, config, rng, report);
  }
  return report;
}

std::string FormatReport(const ScenarioReport& report) {
  auto rate = [](double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return std::string(buffer);
  };
  std::string out;
  out += "scenario=" + report.scenario + "\n";
  out += "mode=" + std::string(ToString(report.mode)) + "\n";
  out += "seed=" + std::to_string(report.seed) + "\n";
  out += "trials=" + std::to_string(report.trials) + "\n";
  out += "passed=" + std::to_string(report.passed) + "\n";
  out += "failed=" + std::to_string(report.failed) + "\n";
  out += "pass_rate=" + rate(report.pass_rate()) + "\n";
  if (report.predicate_agreements) {
    out += "predicate_agreements=" + std::to_string(*report.predicate_agreements) + "\n";
  }
  if (report.attributed) {
    out += "attributed=" + std::to_string(*report.attributed) + "\n";
  }
  if (report.collisions) {
    out += "collisions=" + std::to_string(*report.collisions) + "\n";
    out += "collision_rate=" + rate(*report.collision_rate()) + "\n";
  }
  if (report.factors_found) {
    out += "factors_found=" + std::to_string(*report.factors_found) + "\n";
  }
  return out;
}

}  // namespace fsgss
