#pragma once

#include <optional>
#include <string_view>

#include "fsgss/bigint.hpp"
#include "fsgss/handshake.hpp"
#include "fsgss/random.hpp"
#include "fsgss/roster.hpp"

namespace fsgss {

// kLiteral applies the published multiplier r5 mod n. kRepaired uses
// mu = r4 * rho3^-1 mod n so that rho3 * mu = r4 (mod n) and the key equation
// holds for every honest signature.
enum class SignMode { kLiteral, kRepaired };

std::string_view ToString(SignMode mode);
std::optional<SignMode> ParseSignMode(std::string_view text);

struct Signature {
  BigUint m;
  BigUint c;
  BigUint e_cap;  // E = g2^e mod p0
  BigUint r4;
  BigUint r6;
  BigUint s1;
  BigUint s2;

  friend bool operator==(const Signature&, const Signature&) = default;
};

struct SigningNonces {
  BigUint c;
  BigUint e;
};

// The multiplier applied to s and (b*a + c*s) for the given mode. nullopt when
// the repaired multiplier needs an inverse of a non-unit rho3.
std::optional<BigUint> SigningMultiplier(const MemberCredential& credential, const GroupPublicInfo& pub,
                                         const BigUint& r4, const BigUint& r5, SignMode mode);

// Draws nonces c, e in [1, n) until e and s1 are units mod n and r4, E != 1.
// Throws NotInvertible when rho3 is not a unit, GenerationFailed when the
// nonce budget runs out.
Signature Sign(const MemberCredential& credential, const GroupPublicInfo& pub, const BigUint& m,
               SignMode mode, Rng& rng);

// Deterministic core of Sign. Throws NotInvertible when e or (repaired mode)
// rho3 is not a unit mod n, DomainError when m or a nonce is out of range.
Signature SignWithNonces(const MemberCredential& credential, const GroupPublicInfo& pub, const BigUint& m,
                         SignMode mode, const SigningNonces& nonces);

struct VerifyDetail {
  bool key_equation = false;      // g2^r6 == y0^r4 * r4^s1 (mod p0)
  bool message_equation = false;  // g2^(m+r6) == g2^(c*E) * E^s2 (mod p0)

  bool ok() const { return key_equation && message_equation; }
};

// Throws MalformedSignature on an out-of-range field.
void CheckSignatureRanges(const GroupPublicInfo& pub, const Signature& sig);

VerifyDetail VerifyEquations(const GroupPublicInfo& pub, const Signature& sig);

// Accepts iff both equations hold. Uses only {g2, p0, n, y0} and the signature.
bool Verify(const GroupPublicInfo& pub, const Signature& sig);

}  // namespace fsgss
