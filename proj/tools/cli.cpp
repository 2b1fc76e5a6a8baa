#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <random>

#include "fsgss/adversary.hpp"
#include "fsgss/authority.hpp"
#include "fsgss/errors.hpp"
#include "fsgss/formats.hpp"
#include "fsgss/hash.hpp"
#include "fsgss/scenario.hpp"

namespace fsgss::cli {
namespace {

namespace fs = std::filesystem;

// Files kept in a group directory.
struct Layout {
  fs::path dir;

  fs::path params() const { return dir / "params.txt"; }
  fs::path sc_secret() const { return dir / "sc_secret.txt"; }
  fs::path group() const { return dir / "group.txt"; }
  fs::path roster() const { return dir / "roster.txt"; }
  fs::path registry() const { return dir / "registry.txt"; }
  fs::path key(const std::string& id) const { return dir / "keys" / (id + ".key"); }
  fs::path credential(const std::string& id) const { return dir / "creds" / (id + ".cred"); }
};

std::uint64_t ResolveSeed(const std::optional<std::uint64_t>& flag) {
  if (const char* env = std::getenv("FSGSS_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw DomainError(std::string("FSGSS_SEED is not an unsigned integer: ") + env);
    }
  }
  if (flag) {
    return *flag;
  }
  return (std::uint64_t{std::random_device{}()} << 32) ^ std::random_device{}();
}

BigUint ParseHexArg(const std::string& text, const char* what) {
  auto value = ParseCanonicalHex(text);
  if (!value) {
    throw DomainError(std::string(what) + " must be canonical lowercase hex");
  }
  return *value;
}

SignMode ParseModeArg(const std::string& text) {
  auto mode = ParseSignMode(text);
  if (!mode) {
    throw DomainError("mode must be 'repaired' or 'literal'");
  }
  return *mode;
}

Roster LoadRoster(const Layout& layout) {
  return fs::exists(layout.roster()) ? DecodeRoster(ReadFile(layout.roster())) : Roster{};
}

int CmdSetup(std::size_t bits, bool desk, std::optional<std::uint64_t> seed, const fs::path& out_dir,
             std::ostream& out) {
  GroupPublic published;
  ScSecret secret;
  if (desk) {
    const GroupParams params = DeskParams();
    published = params.Public();
    secret = params.Secret();
  } else {
    Rng rng(ResolveSeed(seed));
    auto setup = ScSetup(bits, rng);
    published = setup.published;
    secret = setup.secret;
  }
  const Layout layout{out_dir};
  fs::create_directories(layout.dir);
  WriteFile(layout.params(), EncodeParams(published));
  WriteFile(layout.sc_secret(), EncodeScSecret(secret));
  out << EncodeParams(published);
  return kExitOk;
}

int CmdKeygen(const Layout& layout, const std::string& member, std::optional<std::uint64_t> seed,
              std::ostream& out) {
  const GroupPublic group = DecodeParams(ReadFile(layout.params()));
  Roster roster = LoadRoster(layout);
  if (roster.Contains(member)) {
    throw DuplicateMember("member '" + member + "' is already registered");
  }
  Rng rng(ResolveSeed(seed));
  const KeyPair key = MemberKeygen(group, rng);
  roster.Register(member, key.y);

  fs::create_directories(layout.key(member).parent_path());
  WriteFile(layout.key(member), EncodeKeyFile({member, key}));
  WriteFile(layout.roster(), EncodeRoster(roster));
  if (roster.size() == 1) {
    WriteFile(layout.group(), EncodeGroupInfo({group.p0, group.n, group.g2, key.y}));
    out << "registered manager " << member << " y=" << key.y.ToHex() << "\n";
  } else {
    out << "registered member " << member << " y=" << key.y.ToHex() << "\n";
  }
  return kExitOk;
}

int CmdEnroll(const Layout& layout, const std::string& member, std::optional<std::uint64_t> seed,
              std::ostream& out) {
  const GroupPublicInfo info = DecodeGroupInfo(ReadFile(layout.group()));
  const Roster roster = LoadRoster(layout);
  if (!roster.Contains(member)) {
    throw UnknownMember("member '" + member + "' is not registered");
  }
  const MemberKeyFile manager_key = DecodeKeyFile(ReadFile(layout.key(roster.manager().member_id)));
  const MemberKeyFile member_key = DecodeKeyFile(ReadFile(layout.key(member)));

  ManagerParty manager(manager_key.member_id, GroupManager(info.Group(), manager_key.key, roster));
  MemberParty party(member, info.Group(), member_key.key);
  MessageBus bus;
  Rng rng(ResolveSeed(seed));
  Rng manager_rng = rng.Fork();
  Rng member_rng = rng.Fork();
  EnrollOverBus(manager, party, bus, manager_rng, member_rng);

  fs::create_directories(layout.credential(member).parent_path());
  WriteFile(layout.credential(member), EncodeCredential(party.credential()));
  RegistryStore(layout.registry(), manager.manager().records());
  for (const auto& line : bus.transcript()) {
    out << line;
  }
  out << "enrolled " << member << "\n";
  return kExitOk;
}

int CmdSign(const Layout& layout, const fs::path& cred_path, const fs::path& message_path, SignMode mode,
            const fs::path& out_path, std::optional<std::uint64_t> seed, std::ostream& out) {
  const GroupPublicInfo info = DecodeGroupInfo(ReadFile(layout.group()));
  const MemberCredential credential = DecodeCredential(ReadFile(cred_path), info.Group());
  const BigUint m = HashMessage(ReadFile(message_path), info.n);
  Rng rng(ResolveSeed(seed));
  const Signature sig = Sign(credential, info, m, mode, rng);
  WriteFile(out_path, EncodeSignature(sig));
  out << EncodeSignature(sig);
  return kExitOk;
}

int CmdVerify(const Layout& layout, const fs::path& sig_path, const std::optional<fs::path>& message_path,
              std::ostream& out) {
  const GroupPublicInfo info = DecodeGroupInfo(ReadFile(layout.group()));
  const Signature sig = DecodeSignature(ReadFile(sig_path));
  bool ok = false;
  try {
    const VerifyDetail detail = VerifyEquations(info, sig);
    ok = detail.ok();
    out << "key_equation=" << (detail.key_equation ? "ok" : "fail") << "\n";
    out << "message_equation=" << (detail.message_equation ? "ok" : "fail") << "\n";
  } catch (const MalformedSignature& e) {
    out << "malformed: " << e.what() << "\n";
  }
  if (ok && message_path && HashMessage(ReadFile(*message_path), info.n) != sig.m) {
    out << "message digest does not match m\n";
    ok = false;
  }
  out << (ok ? "valid" : "invalid") << "\n";
  return ok ? kExitOk : kExitDomain;
}

int CmdOpen(const Layout& layout, const fs::path& sig_path, const fs::path& registry_path, SignMode mode,
            std::ostream& out) {
  const GroupPublicInfo info = DecodeGroupInfo(ReadFile(layout.group()));
  const Signature sig = DecodeSignature(ReadFile(sig_path));
  const auto registry = RegistryLoad(registry_path);
  const OpeningResult result = OpenSignature(sig, registry, info, mode);
  for (const auto& note : result.diagnostics) {
    out << "note: " << note << "\n";
  }
  for (const auto& match : result.matches) {
    out << "match member=" << match.member_id << " b=" << match.b.ToHex() << " rho3=" << match.rho3.ToHex()
        << "\n";
  }
  if (result.matches.empty()) {
    out << "no matching session\n";
  }
  return kExitOk;
}

int CmdForge(const Layout& layout, const std::string& mode, const fs::path& message_path,
             const std::optional<fs::path>& sig_path, const fs::path& out_path, std::optional<std::uint64_t> seed,
             std::ostream& out) {
  const GroupPublicInfo info = DecodeGroupInfo(ReadFile(layout.group()));
  const BigUint m_star = HashMessage(ReadFile(message_path), info.n);
  Rng rng(ResolveSeed(seed));
  Signature forged;
  if (mode == "dlp") {
    forged = ForgeWithDlp(m_star, info, DlpOracle(info.Group()), rng);
  } else {
    if (!sig_path) {
      throw DomainError("forge --mode reuse needs --sig with an intercepted signature");
    }
    forged = ForgeReuse(DecodeSignature(ReadFile(*sig_path)), m_star, info, rng);
  }
  WriteFile(out_path, EncodeSignature(forged));
  out << EncodeSignature(forged);
  return kExitOk;
}

int CmdProveForgery(const Layout& layout, const std::string& b_hex, const std::string& b_star_hex,
                    const std::optional<std::string>& n_hex, std::ostream& out) {
  const BigUint n = n_hex ? ParseHexArg(*n_hex, "--n") : DecodeParams(ReadFile(layout.params())).n;
  const ForgeryOutcome outcome = ProveForgery(ParseHexArg(b_hex, "--b"), ParseHexArg(b_star_hex, "--b-star"), n);
  switch (outcome.verdict) {
    case ForgeryVerdict::kProof:
      out << "verdict=forgery-proven\n";
      out << "factor=" << outcome.proof->factor.ToHex() << "\n";
      out << "factor_decimal=" << outcome.proof->factor.ToDecimal() << "\n";
      return kExitOk;
    case ForgeryVerdict::kIndistinguishable:
      out << "verdict=indistinguishable\n";
      return kExitDomain;
    case ForgeryVerdict::kNoFactor:
      out << "verdict=no-factor\n";
      return kExitDomain;
  }
  return kExitDomain;
}

int CmdDemo(const std::string& scenario, std::size_t trials, std::optional<std::uint64_t> seed,
            const std::string& mode, std::ostream& out) {
  ScenarioConfig config{scenario, trials, ResolveSeed(seed), ParseModeArg(mode)};
  out << FormatReport(RunScenario(config));
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto kModeCheck = CLI::IsMember({"repaired", "literal"});
  CLI::App app{"Fail-stop group signatures: setup, enrollment, signing, opening and forgery proofs", "fsgss"};
  app.require_subcommand(1);

  fs::path dir = ".";
  app.add_option("--dir", dir, "Group directory")->capture_default_str();
  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "RNG seed (FSGSS_SEED overrides)");

  std::size_t bits = 16;
  bool desk = false;
  fs::path setup_out;
  auto* setup = app.add_subcommand("setup", "Generate group parameters");
  setup->add_option("--bits", bits, "Bit length of p1 and q1")->capture_default_str();
  setup->add_flag("--desk", desk, "Use the fixed desk-scale parameter set");
  setup->add_option("--seed", seed, "RNG seed");
  setup->add_option("--out", setup_out, "Output directory")->required();

  std::string member;
  auto* keygen = app.add_subcommand("keygen", "Generate and register a member key (first one is the manager)");
  keygen->add_option("--member", member, "Member id")->required();
  keygen->add_option("--seed", seed, "RNG seed");

  auto* enroll = app.add_subcommand("enroll", "Run the 3-way handshake for a registered member");
  enroll->add_option("--member", member, "Member id")->required();
  enroll->add_option("--seed", seed, "RNG seed");

  fs::path cred_path;
  fs::path message_path;
  fs::path out_path;
  std::string mode = "repaired";
  auto* sign = app.add_subcommand("sign", "Sign a message file");
  sign->add_option("--cred", cred_path, "Credential file")->required();
  sign->add_option("--message-file", message_path, "Message to sign")->required();
  sign->add_option("--mode", mode, "repaired|literal")->capture_default_str()->check(kModeCheck);
  sign->add_option("--out", out_path, "Signature output file")->required();
  sign->add_option("--seed", seed, "RNG seed");

  fs::path sig_path;
  std::optional<fs::path> verify_message;
  auto* verify = app.add_subcommand("verify", "Verify a signature (exit 0 valid, 1 invalid)");
  verify->add_option("--sig", sig_path, "Signature file")->required();
  verify->add_option("--message-file", verify_message, "Also check m against this message");

  fs::path registry_path;
  auto* open = app.add_subcommand("open", "Identify the session behind a signature");
  open->add_option("--sig", sig_path, "Signature file")->required();
  open->add_option("--registry", registry_path, "Registry file")->required();
  open->add_option("--mode", mode, "repaired|literal")->capture_default_str()->check(kModeCheck);

  std::string forge_mode;
  std::optional<fs::path> intercepted;
  auto* forge = app.add_subcommand("forge", "Produce a forged signature");
  forge->add_option("--mode", forge_mode, "dlp|reuse")->required()->check(CLI::IsMember({"dlp", "reuse"}));
  forge->add_option("--message-file", message_path, "Message to forge on")->required();
  forge->add_option("--sig", intercepted, "Intercepted signature (reuse mode)");
  forge->add_option("--out", out_path, "Output file")->required();
  forge->add_option("--seed", seed, "RNG seed");

  std::string b_hex;
  std::string b_star_hex;
  std::optional<std::string> n_hex;
  auto* prove = app.add_subcommand("prove-forgery", "Extract a factor of n from two representations");
  prove->add_option("--b", b_hex, "Honest b (hex)")->required();
  prove->add_option("--b-star", b_star_hex, "Disputed b* (hex)")->required();
  prove->add_option("--n", n_hex, "Modulus n (hex); defaults to params.txt");

  std::string scenario;
  std::size_t trials = 100;
  auto* demo = app.add_subcommand("demo", "Run a multi-party scenario and print its report");
  demo->add_option("--scenario", scenario, "honest|maul|dlp-forge|failstop")
      ->required()
      ->check(CLI::IsMember({"honest", "maul", "dlp-forge", "failstop"}));
  demo->add_option("--trials", trials, "Trial count")->capture_default_str();
  demo->add_option("--seed", seed, "RNG seed");
  demo->add_option("--mode", mode, "repaired|literal")->capture_default_str()->check(kModeCheck);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Layout layout{dir};
  try {
    if (*setup) {
      return CmdSetup(bits, desk, seed, setup_out, out);
    }
    if (*keygen) {
      return CmdKeygen(layout, member, seed, out);
    }
    if (*enroll) {
      return CmdEnroll(layout, member, seed, out);
    }
    if (*sign) {
      return CmdSign(layout, cred_path, message_path, ParseModeArg(mode), out_path, seed, out);
    }
    if (*verify) {
      return CmdVerify(layout, sig_path, verify_message, out);
    }
    if (*open) {
      return CmdOpen(layout, sig_path, registry_path, ParseModeArg(mode), out);
    }
    if (*forge) {
      return CmdForge(layout, forge_mode, message_path, intercepted, out_path, seed, out);
    }
    if (*prove) {
      return CmdProveForgery(layout, b_hex, b_star_hex, n_hex, out);
    }
    if (*demo) {
      return CmdDemo(scenario, trials, seed, mode, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace fsgss::cli
