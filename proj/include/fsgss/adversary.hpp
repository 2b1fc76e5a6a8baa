#pragma once

#include <cstdint>
#include <optional>

#include "fsgss/bigint.hpp"
#include "fsgss/handshake.hpp"
#include "fsgss/modmath.hpp"
#include "fsgss/random.hpp"
#include "fsgss/signing.hpp"

namespace fsgss {

using InterceptedSignature = Signature;

// Discrete logs in <g2> by exhaustive search. Only usable at desk scale.
class DlpOracle {
 public:
  explicit DlpOracle(GroupPublic group, std::uint64_t cap = kDefaultDlogCap);

  // x in [0, ord(g2)) with g2^x = y, or nullopt.
  std::optional<BigUint> Dlog(const BigUint& y) const;
  // Throws OracleTooWeak.
  BigUint DlogOrThrow(const BigUint& y) const;
  // ord(g2), found by walking the powers of g2. Throws OracleTooWeak past the cap.
  BigUint GroupOrder() const;

  const GroupPublic& group() const { return group_; }

 private:
  GroupPublic group_;
  std::uint64_t cap_;
};

// Forges a signature on m_star from y0's discrete log alone: picks r4 = g2^lambda
// and s1, then solves the key equation for r6 and the message equation for s2.
// Throws OracleTooWeak when y0 is out of the oracle's reach.
Signature ForgeWithDlp(const BigUint& m_star, const GroupPublicInfo& pub, const DlpOracle& oracle, Rng& rng);

// Rebinds an intercepted signature to m_star without any secret: keeps
// (r4, r6, s1) and re-solves the message equation with fresh (c', E', s2').
Signature ForgeReuse(const InterceptedSignature& intercepted, const BigUint& m_star,
                     const GroupPublicInfo& pub, Rng& rng);

struct FailstopTrialResult {
  bool collided = false;
  std::optional<BigUint> factor;
  BigUint b;       // honest member's b mod n
  BigUint b_star;  // forger's representation
};

// The forger recovers b mod ord(g2) from (r1, r3) with the oracle and picks a
// uniformly random lift mod n; the honest member then reveals b.
FailstopTrialResult RunFailstopTrial(const MemberCredential& honest, const GroupPublicInfo& pub,
                                     const DlpOracle& oracle, Rng& rng);

}  // namespace fsgss
