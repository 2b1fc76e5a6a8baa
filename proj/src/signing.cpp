#include "fsgss/signing.hpp"

#include "fsgss/errors.hpp"
#include "fsgss/modmath.hpp"

namespace fsgss {

std::string_view ToString(SignMode mode) { return mode == SignMode::kLiteral ? "literal" : "repaired"; }

std::optional<SignMode> ParseSignMode(std::string_view text) {
  if (text == "literal") {
    return SignMode::kLiteral;
  }
  if (text == "repaired") {
    return SignMode::kRepaired;
  }
  return std::nullopt;
}

std::optional<BigUint> SigningMultiplier(const MemberCredential& credential, const GroupPublicInfo& pub,
                                         const BigUint& r4, const BigUint& r5, SignMode mode) {
  BigUint mu;
  if (mode == SignMode::kLiteral) {
    mu = r5 % pub.n;
  } else {
    const auto rho3_inv = ModInv(credential.rho3, pub.n);
    if (!rho3_inv) {
      return std::nullopt;
    }
    mu = r4 % pub.n * *rho3_inv % pub.n;
  }
  return mu;
}

Signature SignWithNonces(const MemberCredential& credential, const GroupPublicInfo& pub, const BigUint& m,
                         SignMode mode, const SigningNonces& nonces) {
  const BigUint& n = pub.n;
  if (m >= n) {
    throw DomainError("message scalar must lie in [0, n)");
  }
  if (nonces.c.IsZero() || nonces.c >= n || nonces.e.IsZero() || nonces.e >= n) {
    throw DomainError("signing nonces must lie in [1, n)");
  }
  const BigUint e_inv = ModInvOrThrow(nonces.e, n);

  const BigUint r5 = ModExp(pub.g2, nonces.c, pub.p0);
  BigUint e_cap = ModExp(pub.g2, nonces.e, pub.p0);
  BigUint r4 = credential.r3 * r5 % pub.p0;

  const auto mu = SigningMultiplier(credential, pub, r4, r5, mode);
  if (!mu) {
    throw NotInvertible("credential rho3 is not a unit modulo n");
  }
  BigUint s1 = *mu * credential.s % n;
  BigUint r6 = (credential.b * credential.a + nonces.c * credential.s) % n * *mu % n;
  BigUint s2 = ModSub(m + r6, nonces.c * e_cap, n) * e_inv % n;
  return {m, nonces.c, std::move(e_cap), std::move(r4), std::move(r6), std::move(s1), std::move(s2)};
}

Signature Sign(const MemberCredential& credential, const GroupPublicInfo& pub, const BigUint& m, SignMode mode,
               Rng& rng) {
  if (Gcd(credential.rho3, pub.n) != BigUint(1)) {
    throw NotInvertible("credential rho3 is not a unit modulo n");
  }
  for (std::size_t attempt = 0; attempt < kResampleBudget; ++attempt) {
    SigningNonces nonces{rng.InRange(BigUint(1), pub.n), rng.InRange(BigUint(1), pub.n)};
    Signature sig;
    try {
      sig = SignWithNonces(credential, pub, m, mode, nonces);
    } catch (const NotInvertible&) {
      continue;
    }
    // r4 = 1 leaves s1 unbound and E = 1 leaves s2 unbound; a non-unit s1 cannot be opened.
    if (sig.r4 == BigUint(1) || sig.e_cap == BigUint(1) || Gcd(sig.s1, pub.n) != BigUint(1)) {
      continue;
    }
    return sig;
  }
  throw GenerationFailed("no usable signing nonces within the resample budget");
}

void CheckSignatureRanges(const GroupPublicInfo& pub, const Signature& sig) {
  auto require = [](bool ok, const char* field) {
    if (!ok) {
      throw MalformedSignature(std::string("signature field ") + field + " out of range");
    }
  };
  require(sig.m < pub.n, "m");
  require(sig.c < pub.n, "c");
  require(!sig.e_cap.IsZero() && sig.e_cap < pub.p0, "e_cap");
  require(!sig.r4.IsZero() && sig.r4 < pub.p0, "r4");
  require(sig.r6 < pub.n, "r6");
  require(sig.s1 < pub.n, "s1");
  require(sig.s2 < pub.n, "s2");
}

VerifyDetail VerifyEquations(const GroupPublicInfo& pub, const Signature& sig) {
  CheckSignatureRanges(pub, sig);
  const BigUint& p0 = pub.p0;
  const BigUint& n = pub.n;
  VerifyDetail detail;

  const BigUint key_lhs = ModExp(pub.g2, sig.r6, p0);
  const BigUint key_rhs = ModExp(pub.y0, sig.r4 % n, p0) * ModExp(sig.r4, sig.s1, p0) % p0;
  detail.key_equation = key_lhs == key_rhs;

  const BigUint msg_lhs = ModExp(pub.g2, (sig.m + sig.r6) % n, p0);
  const BigUint msg_rhs = ModExp(pub.g2, sig.c * sig.e_cap % n, p0) * ModExp(sig.e_cap, sig.s2, p0) % p0;
  detail.message_equation = msg_lhs == msg_rhs;
  return detail;
}

bool Verify(const GroupPublicInfo& pub, const Signature& sig) { return VerifyEquations(pub, sig).ok(); }

}  // namespace fsgss
