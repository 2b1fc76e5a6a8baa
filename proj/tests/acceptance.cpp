// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fsgss/adversary.hpp"
#include "fsgss/authority.hpp"
#include "fsgss/errors.hpp"
#include "fsgss/formats.hpp"
#include "fsgss/scenario.hpp"
#include "fsgss/wire.hpp"
#include "support/audit.hpp"
#include "support/desk_fixture.hpp"
#include "support/naive.hpp"

namespace fsgss {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

constexpr std::uint64_t kSeed = 1;
constexpr std::size_t kMembers = 5;

std::string Fmt(const char* format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), format, value);
  return buffer;
}

Outcome WorkedVector() {
  const GroupPublicInfo info = testing::DeskInfoWithManager(2);
  const MemberCredential credential = testing::EnrollWith(info, 2, "u3", 1, 1, 3).credential;
  const SigningNonces nonces{2, 1};
  const Signature repaired = SignWithNonces(credential, info, 10, SignMode::kRepaired, nonces);
  const Signature literal = SignWithNonces(credential, info, 10, SignMode::kLiteral, nonces);
  const bool repaired_ok = credential.a == BigUint(5) && repaired == Signature{10, 2, 122, 552, 0, 138, 19} &&
                           Verify(info, repaired);
  const bool literal_ok = literal.r6 == BigUint(55) && literal.s1 == BigUint(82) && !Verify(info, literal);
  std::ostringstream detail;
  detail << "repaired r4=" << repaired.r4.ToDecimal() << " r6=" << repaired.r6.ToDecimal()
         << " s1=" << repaired.s1.ToDecimal() << " s2=" << repaired.s2.ToDecimal()
         << " verify=" << Verify(info, repaired) << "; literal r6=" << literal.r6.ToDecimal()
         << " s1=" << literal.s1.ToDecimal() << " verify=" << Verify(info, literal);
  return {repaired_ok && literal_ok, detail.str()};
}

Outcome RepairedCompleteness() {
  const ScenarioReport report = RunScenario({"honest", 1000, kSeed, SignMode::kRepaired});
  return {report.passed == 1000, std::to_string(report.passed) + "/1000 verified"};
}

Outcome LiteralDiagnosis() {
  const ScenarioReport report = RunScenario({"honest", 1000, kSeed, SignMode::kLiteral});
  const std::size_t agreements = report.predicate_agreements.value_or(0);
  const double rate = report.pass_rate();
  const bool equivalence = agreements == 1000;
  const bool in_band = rate >= 0.05 && rate <= 0.14;
  return {equivalence && in_band, "predicate agreement " + std::to_string(agreements) + "/1000, pass rate " +
                                      Fmt("%.3f", rate) + " (band [0.05, 0.14])"};
}

Outcome Opening() {
  Rng rng(kSeed);
  const testing::DeskFixture fixture = testing::MakeDeskFixture(kMembers, rng);
  const auto registry = fixture.Registry();
  std::size_t found = 0;
  std::size_t unique = 0;
  constexpr std::size_t kTrials = 500;
  for (std::size_t i = 0; i < kTrials; ++i) {
    const auto& signer = fixture.members[rng.Below(kMembers).ToU64()];
    const Signature sig = Sign(signer.credential, fixture.info, rng.Below(fixture.info.n), SignMode::kRepaired, rng);
    const OpeningResult result = OpenSignature(sig, registry, fixture.info, SignMode::kRepaired);
    bool has_truth = false;
    for (const auto& match : result.matches) {
      has_truth = has_truth || match.member_id == signer.credential.member_id;
    }
    found += has_truth ? 1 : 0;
    unique += has_truth && result.matches.size() == 1 ? 1 : 0;
  }
  return {found == kTrials && unique * 100 >= kTrials * 95,
          "true signer found " + std::to_string(found) + "/500, unique " + std::to_string(unique) + "/500"};
}

Outcome FailstopStatistics() {
  Rng rng(kSeed);
  const testing::DeskFixture fixture = testing::MakeDeskFixture(kMembers, rng);
  const DlpOracle oracle(fixture.info.Group());
  const GroupParams params = DeskParams();
  constexpr std::size_t kTrials = 2000;
  std::size_t collisions = 0;
  std::size_t bad_factors = 0;
  for (std::size_t i = 0; i < kTrials; ++i) {
    const auto& honest = fixture.members[rng.Below(kMembers).ToU64()].credential;
    const FailstopTrialResult trial = RunFailstopTrial(honest, fixture.info, oracle, rng);
    if (trial.collided) {
      ++collisions;
    } else if (!trial.factor || (*trial.factor != params.p1 && *trial.factor != params.q1)) {
      ++bad_factors;
    }
  }
  const double rate = static_cast<double>(collisions) / kTrials;
  const double expected = 1.0 / 23.0;
  const bool in_band = rate >= expected - 0.02 && rate <= expected + 0.02;
  return {in_band && bad_factors == 0, "collision rate " + Fmt("%.4f", rate) + " (target " + Fmt("%.4f", expected) +
                                           " +/- 0.02), non-collisions without factor in {11, 23}: " +
                                           std::to_string(bad_factors)};
}

Outcome ForgeryAcceptance() {
  Rng rng(kSeed);
  const testing::DeskFixture fixture = testing::MakeDeskFixture(kMembers, rng);
  const auto registry = fixture.Registry();
  const GroupPublicInfo& info = fixture.info;
  const DlpOracle oracle(info.Group());
  std::size_t dlp_valid = 0;
  std::size_t reuse_valid = 0;
  std::size_t attributed = 0;
  std::size_t reuse_opened = 0;
  for (int i = 0; i < 200; ++i) {
    const Signature forged = ForgeWithDlp(rng.Below(info.n), info, oracle, rng);
    if (Verify(info, forged)) {
      ++dlp_valid;
      attributed += OpenSignature(forged, registry, info, SignMode::kRepaired).matches.size();
    }
  }
  // Reuse forgeries carry an honest session's (r4, r6, s1); one that redraws c' = c
  // opens to that session, so their openings are reported rather than gated.
  for (int i = 0; i < 200; ++i) {
    const Signature honest = Sign(fixture.members[rng.Below(kMembers).ToU64()].credential, info,
                                  rng.Below(info.n), SignMode::kRepaired, rng);
    const Signature mauled = ForgeReuse(honest, rng.Below(info.n), info, rng);
    if (Verify(info, mauled)) {
      ++reuse_valid;
      reuse_opened += OpenSignature(mauled, registry, info, SignMode::kRepaired).matches.size();
    }
  }
  return {dlp_valid == 200 && reuse_valid == 200 && attributed == 0,
          "dlp forgeries valid " + std::to_string(dlp_valid) + "/200, reuse forgeries valid " +
              std::to_string(reuse_valid) + "/200, dlp forgeries attributed " + std::to_string(attributed) +
              "/200 (reuse forgeries opened to their source session: " + std::to_string(reuse_opened) + ")"};
}

Outcome ProveForgeryExhaustive() {
  std::size_t pairs = 0;
  std::size_t wrong = 0;
  for (std::uint64_t b = 0; b < 253; ++b) {
    for (std::uint64_t b_star = b % 11; b_star < 253; b_star += 11) {
      ++pairs;
      const ForgeryOutcome outcome = ProveForgery(b, b_star, 253);
      if (b == b_star) {
        wrong += outcome.verdict == ForgeryVerdict::kIndistinguishable ? 0 : 1;
        continue;
      }
      const std::uint64_t d = naive::GcdBySubtraction(b > b_star ? b - b_star : b_star - b, 253);
      const bool ok = outcome.verdict == ForgeryVerdict::kProof && outcome.proof->factor == BigUint(11) && d == 11;
      wrong += ok ? 0 : 1;
    }
  }
  return {pairs == 253 * 23 && wrong == 0,
          std::to_string(pairs) + " pairs with b = b* (mod 11), mismatches " + std::to_string(wrong)};
}

Outcome ModmathConformance() {
  DeskParams().Validate();
  MicroParams().Validate();

  std::size_t primality_mismatches = 0;
  for (std::uint64_t x = 0; x < 10000; ++x) {
    primality_mismatches += IsProbablePrime(BigUint(x)) == naive::IsPrimeTrialDivision(x) ? 0 : 1;
  }

  Rng rng(kSeed);
  std::size_t inverse_failures = 0;
  std::size_t pairs = 0;
  while (pairs < 10000) {
    const BigUint modulus = rng.InRange(BigUint(2), rng.ExactBits(1 + rng.Below(128).ToU64()) + BigUint(3));
    const BigUint x = rng.Below(modulus);
    if (Gcd(x, modulus) != BigUint(1)) {
      continue;
    }
    ++pairs;
    const auto inverse = ModInv(x, modulus);
    inverse_failures += inverse && x * *inverse % modulus == BigUint(1) % modulus ? 0 : 1;
  }

  const GroupPublic group = DeskParams().Public();
  std::size_t dlog_failures = 0;
  for (std::uint64_t x = 0; x < 11; ++x) {
    dlog_failures += DlogBruteforce(ModExp(group.g2, x, group.p0), group) == BigUint(x) ? 0 : 1;
  }
  return {primality_mismatches == 0 && inverse_failures == 0 && dlog_failures == 0,
          "primality mismatches " + std::to_string(primality_mismatches) + "/10000, inverse failures " +
              std::to_string(inverse_failures) + "/10000, dlog failures " + std::to_string(dlog_failures) + "/11"};
}

Outcome KnowledgeAudit() {
  Rng rng(kSeed);
  DeskGroup group = BuildDeskGroup(kMembers, rng);
  for (auto& member : group.members) {
    const Signature sig = member.SignAndRecord(rng.Below(group.sc.params().n), SignMode::kRepaired, rng);
    group.bus.Send({member.id(), "R", ToWire(sig)});
    group.recipient.Accept(SignatureFromWire(group.bus.ReceiveOrThrow("R").message));
  }
  std::vector<std::string> failures;
  auto audit = [&](const std::string& role, const std::string& state, const std::set<std::string>& expected) {
    if (testing::StateKeys(state) != expected) {
      failures.push_back(role);
    }
  };
  audit("SC", group.sc.SerializeState(), testing::ExpectedSystemCenterKeys());
  audit(group.manager.id(), group.manager.SerializeState(), testing::ExpectedManagerKeys());
  for (const auto& member : group.members) {
    audit(member.id(), member.SerializeState(), testing::ExpectedMemberKeys());
  }
  audit("R", group.recipient.SerializeState(), testing::ExpectedRecipientKeys());
  std::string detail = std::to_string(3 + group.members.size()) + " role states audited";
  for (const auto& role : failures) {
    detail += ", mismatch in " + role;
  }
  return {failures.empty(), detail};
}

Outcome WireRoundTrip() {
  Rng rng(kSeed);
  std::size_t wire_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto type = static_cast<MessageType>(rng.Below(5).ToU64());
    WireMessage message{type, {}};
    for (std::size_t f = 0; f < FieldOrder(type).size(); ++f) {
      message.fields.push_back(rng.Below(1 + rng.Below(3).ToU64() * 40) == BigUint(0)
                                   ? BigUint(0)
                                   : rng.ExactBits(1 + rng.Below(256).ToU64()));
    }
    const std::string bytes = Encode(message);
    wire_failures += Decode(bytes) == message && Encode(Decode(bytes)) == bytes ? 0 : 1;
  }

  const testing::DeskFixture fixture = testing::MakeDeskFixture(2, rng);
  const GroupParams params = DeskParams();
  const Signature sig = Sign(fixture.members[0].credential, fixture.info, 42, SignMode::kRepaired, rng);
  Roster roster;
  roster.Register("u0", fixture.manager_key.y);
  std::size_t file_failures = 0;
  file_failures += DecodeParams(EncodeParams(params.Public())) == params.Public() ? 0 : 1;
  file_failures += DecodeScSecret(EncodeScSecret(params.Secret())) == params.Secret() ? 0 : 1;
  file_failures += DecodeGroupInfo(EncodeGroupInfo(fixture.info)) == fixture.info ? 0 : 1;
  file_failures += DecodeSignature(EncodeSignature(sig)) == sig ? 0 : 1;
  file_failures += DecodeKeyFile(EncodeKeyFile({"u0", fixture.manager_key})).key == fixture.manager_key ? 0 : 1;
  file_failures += DecodeCredential(EncodeCredential(fixture.members[0].credential), params.Public()) ==
                           fixture.members[0].credential
                       ? 0
                       : 1;
  file_failures += DecodeRoster(EncodeRoster(roster)) == roster ? 0 : 1;
  const auto registry = fixture.Registry();
  file_failures += DecodeRegistry(EncodeRegistry(registry)) == registry ? 0 : 1;

  std::size_t accepted_violations = 0;
  auto rejects = [&](const std::function<void()>& decode) {
    try {
      decode();
      ++accepted_violations;
    } catch (const ParseError&) {
    }
  };
  rejects([] { Decode("type=R1\nr1=07a\n"); });
  rejects([] { Decode("type=R1\nr1=7A\n"); });
  rejects([] { Decode("type=R1\nr1=\n"); });
  rejects([] { Decode("type=AS\ns=3\na=5\n"); });
  rejects([] { Decode("type=R9\n"); });
  rejects([] { DecodeParams("p0=03f5\nn=fd\ng2=7a\n"); });
  rejects([] { DecodeSignature("m=a\nc=2\ne_cap=7a\nr4=228\nr6=0\ns1=8a\ns2=+13\n"); });
  rejects([] { DecodeRegistryLine("member=u1 k=1 r1=7a r2=1 a=5 s=0x3"); });

  return {wire_failures == 0 && file_failures == 0 && accepted_violations == 0,
          "wire mismatches " + std::to_string(wire_failures) + "/1000, file format mismatches " +
              std::to_string(file_failures) + "/8, non-canonical inputs accepted " +
              std::to_string(accepted_violations) + "/8"};
}

}  // namespace
}  // namespace fsgss

int main() {
  using fsgss::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "worked vector", 1.0, fsgss::WorkedVector},
      {2, "repaired completeness", 5.0, fsgss::RepairedCompleteness},
      {3, "literal-mode diagnosis", 5.0, fsgss::LiteralDiagnosis},
      {4, "opening", 10.0, fsgss::Opening},
      {5, "fail-stop statistics", 10.0, fsgss::FailstopStatistics},
      {6, "forgery acceptance", 10.0, fsgss::ForgeryAcceptance},
      {7, "prove_forgery exhaustive", 5.0, fsgss::ProveForgeryExhaustive},
      {8, "modmath conformance", 10.0, fsgss::ModmathConformance},
      {9, "knowledge-matrix audit", 1.0, fsgss::KnowledgeAudit},
      {10, "wire/file round trip", 5.0, fsgss::WireRoundTrip},
  };
  int failed = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    fsgss::Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= criterion.limit_seconds;
    const bool pass = outcome.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s %2d %-26s %7.3fs (limit %.0fs%s)  %s\n", pass ? "PASS" : "FAIL", criterion.id, criterion.name,
                seconds, criterion.limit_seconds, in_time ? "" : ", exceeded", outcome.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
