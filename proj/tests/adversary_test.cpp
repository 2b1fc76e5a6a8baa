#include <doctest.h>

#include "fsgss/adversary.hpp"
#include "fsgss/errors.hpp"
#include "support/desk_fixture.hpp"
#include "support/naive.hpp"

namespace fsgss {
namespace {

using testing::DeskFixture;
using testing::MakeDeskFixture;

TEST_CASE("oracle inverts exponentiation on the desk and micro groups") {
  const GroupPublic desk = DeskParams().Public();
  const DlpOracle oracle(desk);
  CHECK(oracle.GroupOrder() == BigUint(11));
  for (std::uint64_t x = 0; x < 11; ++x) {
    CHECK(oracle.Dlog(naive::PowMod(122, x, 1013)) == BigUint(x));
  }
  CHECK_FALSE(oracle.Dlog(2).has_value());
  CHECK_FALSE(oracle.Dlog(0).has_value());
  CHECK_THROWS_AS(oracle.DlogOrThrow(2), OracleTooWeak);

  const DlpOracle micro(MicroParams().Public());
  CHECK(micro.GroupOrder() == BigUint(3));
  CHECK(micro.Dlog(naive::PowMod(47, 2, 61)) == BigUint(2));
}

TEST_CASE("an oracle below the group order is too weak") {
  const GroupPublicInfo info = testing::DeskInfoWithManager(7);
  const DlpOracle weak(info.Group(), 5);
  Rng rng(1);
  CHECK_THROWS_AS(weak.GroupOrder(), OracleTooWeak);
  CHECK_THROWS_AS(ForgeWithDlp(3, info, weak, rng), OracleTooWeak);
}

TEST_CASE("dlp forgeries verify") {
  Rng rng(30);
  const DeskFixture fixture = MakeDeskFixture(1, rng);
  const DlpOracle oracle(fixture.info.Group());
  for (std::uint64_t m = 0; m < 253; ++m) {
    const Signature forged = ForgeWithDlp(m, fixture.info, oracle, rng);
    CHECK(forged.m == BigUint(m));
    CHECK(Verify(fixture.info, forged));
  }
  CHECK_THROWS_AS(ForgeWithDlp(253, fixture.info, oracle, rng), DomainError);
}

TEST_CASE("reuse forgery of the worked signature") {
  const GroupPublicInfo info = testing::DeskInfoWithManager(2);
  const Signature intercepted{10, 2, 122, 552, 0, 138, 19};
  REQUIRE(Verify(info, intercepted));
  Rng rng(31);
  const Signature mauled = ForgeReuse(intercepted, 77, info, rng);
  CHECK(mauled.m == BigUint(77));
  CHECK(mauled.r4 == intercepted.r4);
  CHECK(mauled.r6 == intercepted.r6);
  CHECK(mauled.s1 == intercepted.s1);
  const VerifyDetail detail = VerifyEquations(info, mauled);
  CHECK(detail.key_equation);
  CHECK(detail.message_equation);
  CHECK(Verify(info, ForgeReuse(intercepted, 10, info, rng)));

  Signature invalid = intercepted;
  invalid.s2 = 20;
  CHECK_THROWS_AS(ForgeReuse(invalid, 77, info, rng), DomainError);
}

TEST_CASE("reuse forgeries of honest signatures verify") {
  Rng rng(32);
  const DeskFixture fixture = MakeDeskFixture(5, rng);
  for (int i = 0; i < 200; ++i) {
    const Signature sig = Sign(fixture.members[i % 5].credential, fixture.info, rng.Below(fixture.info.n),
                               SignMode::kRepaired, rng);
    CHECK(Verify(fixture.info, ForgeReuse(sig, rng.Below(fixture.info.n), fixture.info, rng)));
  }
}

TEST_CASE("fail-stop trials") {
  Rng rng(33);
  const DeskFixture fixture = MakeDeskFixture(5, rng);
  const DlpOracle oracle(fixture.info.Group());
  std::size_t collisions = 0;
  constexpr std::size_t kTrials = 2000;
  for (std::size_t i = 0; i < kTrials; ++i) {
    const auto& honest = fixture.members[i % 5].credential;
    const FailstopTrialResult trial = RunFailstopTrial(honest, fixture.info, oracle, rng);
    CHECK(trial.b == honest.b % BigUint(253));
    CHECK(trial.b_star < BigUint(253));
    CHECK(trial.b % BigUint(11) == trial.b_star % BigUint(11));
    if (trial.collided) {
      ++collisions;
      CHECK(trial.b == trial.b_star);
      CHECK_FALSE(trial.factor.has_value());
    } else {
      REQUIRE(trial.factor.has_value());
      CHECK(*trial.factor == BigUint(11));
    }
  }
  const double rate = static_cast<double>(collisions) / kTrials;
  CHECK(rate >= 1.0 / 23.0 - 0.02);
  CHECK(rate <= 1.0 / 23.0 + 0.02);
}

}  // namespace
}  // namespace fsgss
