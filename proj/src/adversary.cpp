#include "fsgss/adversary.hpp"

#include "fsgss/authority.hpp"
#include "fsgss/errors.hpp"

namespace fsgss {
namespace {

BigUint RandomUnit(const BigUint& n, Rng& rng) {
  for (std::size_t attempt = 0; attempt < kResampleBudget; ++attempt) {
    BigUint candidate = rng.InRange(BigUint(1), n);
    if (Gcd(candidate, n) == BigUint(1)) {
      return candidate;
    }
  }
  throw GenerationFailed("no unit found within the resample budget");
}

// s2 solving g2^(m + r6) = g2^(c*E) * E^s2 with E = g2^e.
BigUint SolveMessageEquation(const BigUint& m, const BigUint& r6, const BigUint& c, const BigUint& e_cap,
                             const BigUint& e, const BigUint& n) {
  return ModSub(m + r6, c * e_cap, n) * ModInvOrThrow(e, n) % n;
}

}  // namespace

DlpOracle::DlpOracle(GroupPublic group, std::uint64_t cap) : group_(std::move(group)), cap_(cap) {}

std::optional<BigUint> DlpOracle::Dlog(const BigUint& y) const {
  if (y.IsZero() || y >= group_.p0) {
    return std::nullopt;
  }
  return DlogBruteforce(y, group_, cap_);
}

BigUint DlpOracle::DlogOrThrow(const BigUint& y) const {
  auto x = Dlog(y);
  if (!x) {
    throw OracleTooWeak("discrete log of " + y.ToHex() + " not found within the oracle cap");
  }
  return *x;
}

BigUint DlpOracle::GroupOrder() const {
  BigUint power = group_.g2 % group_.p0;
  for (std::uint64_t order = 1; order <= cap_; ++order) {
    if (power == BigUint(1)) {
      return BigUint(order);
    }
    power = power * group_.g2 % group_.p0;
  }
  throw OracleTooWeak("order of g2 exceeds the oracle cap");
}

Signature ForgeWithDlp(const BigUint& m_star, const GroupPublicInfo& pub, const DlpOracle& oracle, Rng& rng) {
  const BigUint& n = pub.n;
  if (m_star >= n) {
    throw DomainError("message scalar must lie in [0, n)");
  }
  const BigUint x0 = oracle.DlogOrThrow(pub.y0);

  const BigUint lambda = rng.InRange(BigUint(1), n);
  BigUint r4 = ModExp(pub.g2, lambda, pub.p0);
  BigUint s1 = rng.InRange(BigUint(1), n);
  BigUint r6 = (x0 * r4 + lambda * s1) % n;

  BigUint c = rng.InRange(BigUint(1), n);
  const BigUint e = RandomUnit(n, rng);
  BigUint e_cap = ModExp(pub.g2, e, pub.p0);
  BigUint s2 = SolveMessageEquation(m_star, r6, c, e_cap, e, n);
  return {m_star, std::move(c), std::move(e_cap), std::move(r4), std::move(r6), std::move(s1), std::move(s2)};
}

Signature ForgeReuse(const InterceptedSignature& intercepted, const BigUint& m_star, const GroupPublicInfo& pub,
                     Rng& rng) {
  const BigUint& n = pub.n;
  if (m_star >= n) {
    throw DomainError("message scalar must lie in [0, n)");
  }
  if (!Verify(pub, intercepted)) {
    throw DomainError("intercepted signature does not verify");
  }
  Signature forged = intercepted;
  forged.m = m_star;
  forged.c = rng.InRange(BigUint(1), n);
  const BigUint e = RandomUnit(n, rng);
  forged.e_cap = ModExp(pub.g2, e, pub.p0);
  forged.s2 = SolveMessageEquation(m_star, forged.r6, forged.c, forged.e_cap, e, n);
  return forged;
}

FailstopTrialResult RunFailstopTrial(const MemberCredential& honest, const GroupPublicInfo& pub,
                                     const DlpOracle& oracle, Rng& rng) {
  const BigUint& n = pub.n;
  const BigUint order = oracle.GroupOrder();

  // r3 = r1^b, so log(r3) = b * log(r1) in the exponent group.
  const BigUint log_r1 = oracle.DlogOrThrow(honest.r1);
  const BigUint log_r3 = oracle.DlogOrThrow(honest.r3);
  const BigUint b_residue = log_r3 * ModInvOrThrow(log_r1, order) % order;

  const BigUint lifts = n / order;
  BigUint b_star = b_residue + order * rng.Below(lifts);

  FailstopTrialResult result;
  result.b = honest.b % n;
  result.b_star = std::move(b_star);
  const ForgeryOutcome outcome = ProveForgery(result.b, result.b_star, n);
  result.collided = outcome.verdict == ForgeryVerdict::kIndistinguishable;
  if (outcome.proof) {
    result.factor = outcome.proof->factor;
  }
  return result;
}

}  // namespace fsgss
