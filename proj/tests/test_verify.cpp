#include "pfhpd/verify.hpp"

#include <gtest/gtest.h>

using namespace pfhpd;

namespace {

std::size_t count_method(const VerificationLog& log, Method m, Outcome o) {
  std::size_t c = 0;
  for (const auto& e : log.entries) c += e.method == m && e.outcome == o;
  return c;
}

}  // namespace

TEST(Suites, ExceptionalCollectionsOnGr2n) {
  for (std::size_t n : {6u, 7u}) {
    const VerificationLog log = verify_ldx(n);
    EXPECT_TRUE(log.ok()) << n;
    EXPECT_EQ(log.count(Outcome::Fail), 0u);
  }
  EXPECT_EQ(verify_ldx(6).count(Outcome::Pass), 102u);
  EXPECT_EQ(verify_ldx(7).count(Outcome::Pass), 198u);
}

TEST(Suites, DualVanishingOnTy6) {
  const VerificationLog log = verify_fkl(6);
  EXPECT_TRUE(log.ok());
  EXPECT_EQ(count_method(log, Method::Direct, Outcome::Pass), 72u);
  EXPECT_EQ(count_method(log, Method::SerreRule, Outcome::ByRule), 9u);
}

TEST(Suites, DualVanishingOnTy7) {
  const VerificationLog log = verify_fkl(7);
  EXPECT_TRUE(log.ok());
  EXPECT_EQ(count_method(log, Method::Direct, Outcome::Pass), 63u);
  EXPECT_EQ(count_method(log, Method::Direct, Outcome::Fail), 0u);
}

TEST(Suites, SerreRuleEntriesSurviveDirectComputation) {
  VerifyOptions opts;
  opts.serre_direct = true;
  const VerificationLog log = verify_fkl(6, opts);
  EXPECT_TRUE(log.ok());
  for (const auto& e : log.entries) {
    if (e.method == Method::SerreRule) {
      EXPECT_NE(e.detail.find("direct cross-check"), std::string::npos) << e.claim;
      EXPECT_EQ(e.detail.find("fail"), std::string::npos) << e.detail;
    }
  }
}

TEST(Suites, WideningTheDirectRangeExposesNonVanishing) {
  // Past the Serre range, Hom(F_2^*, F_2^*(-12 H_Y)) = H^13 ≠ 0 must show up
  // as a failure rather than pass silently.
  VerifyOptions opts;
  opts.t_max = 12;
  const VerificationLog log = verify_fkl(6, opts);
  EXPECT_FALSE(log.ok());
  EXPECT_GT(log.count(Outcome::Fail), 0u);
}

TEST(Suites, QuiverTables) {
  for (std::size_t n : {6u, 7u}) {
    const VerificationLog log = verify_quiver(n);
    EXPECT_TRUE(log.ok()) << n;
    EXPECT_EQ(log.count(Outcome::Pass), 43u);
  }
}

TEST(Suites, ResolutionEulerCharacteristics) {
  const VerificationLog six = verify_gsk_chi(6);
  EXPECT_TRUE(six.ok());
  EXPECT_EQ(six.count(Outcome::Pass), 126u);
  const VerificationLog seven = verify_gsk_chi(7);
  EXPECT_TRUE(seven.ok());
  EXPECT_EQ(seven.count(Outcome::Pass), 104u);
}

TEST(Suites, RunByName) {
  EXPECT_THROW(run_suite("bogus"), std::invalid_argument);
  EXPECT_EQ(run_suite("ldx6").entries.size(), verify_ldx(6).entries.size());
  const auto& names = suite_names();
  EXPECT_EQ(names.size(), 8u);
}
