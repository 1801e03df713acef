#include "gmt/verify/random.hpp"
#include "gmt/verify/suite.hpp"
#include "support.hpp"

namespace gmt::testing {
namespace {

using verify::CaseOutcome;
using verify::Suite;

verify::json strip_timing(verify::json j) {
  j.erase("timing");
  return j;
}

TEST(Reports, IdenticalSeedsGiveIdenticalReports) {
  const auto* s = verify::find_suite("boundary-squared");
  ASSERT_NE(s, nullptr);
  const auto a = verify::run_suite(*s, 11, 40, std::nullopt, 1);
  const auto b = verify::run_suite(*s, 11, 40, std::nullopt, 3);
  EXPECT_EQ(strip_timing(a.to_json()).dump(), strip_timing(b.to_json()).dump());
  EXPECT_TRUE(a.ok());
}

Suite planted_failures() {
  // fails on every multiple of 7 above 20; the first is 21
  return {"planted", "fails from case 21 on", 100,
          [](std::uint64_t, std::size_t i) {
            return i > 20 && i % 7 == 0 ? CaseOutcome::failure("planted", {{"i", i}}) : CaseOutcome::pass();
          },
          std::nullopt};
}

TEST(Reports, FirstFailureIsTheSmallestIndex) {
  for (unsigned workers : {1u, 2u, 5u}) {
    const auto r = verify::run_suite(planted_failures(), 7, std::nullopt, std::nullopt, workers);
    EXPECT_FALSE(r.ok());
    ASSERT_TRUE(r.failing_case.has_value());
    EXPECT_EQ(*r.failing_case, 21u);
    EXPECT_EQ(r.cases_run, 100u);
    // 21, 28, ..., 98
    EXPECT_EQ(r.cases_passed, 100u - 12u);
    EXPECT_EQ(r.counterexample["i"], 21);
  }
}

TEST(Reports, CounterexampleReplaysToFailure) {
  const auto r = verify::run_suite(planted_failures(), 7);
  const auto replay = verify::run_suite(planted_failures(), 7, std::nullopt, r.failing_case);
  EXPECT_EQ(replay.cases_run, 1u);
  EXPECT_FALSE(replay.ok());
  EXPECT_EQ(replay.counterexample, r.counterexample);
}

TEST(Reports, JsonShape) {
  const auto j = verify::run_suite(planted_failures(), 3, 10).to_json();
  for (const char* key : {"suite", "seed", "cases_run", "cases_passed", "passed", "counterexample", "timing"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["counterexample"].is_null());
}

TEST(Random, StreamsDependOnSeedAndIndexOnly) {
  verify::Rng a(5, 17), b(5, 17), c(5, 18);
  const long x = a.uniform(0, 1000000), y = b.uniform(0, 1000000), z = c.uniform(0, 1000000);
  EXPECT_EQ(x, y);
  EXPECT_NE(x, z);
}

TEST(Registry, EveryModuleHasSuites) {
  for (const char* name : {"group-norm-axioms", "smith", "tensor-mod-d", "exterior-laws", "bundle-norms",
                           "boundary-squared", "slice-identity", "rho-mono", "flat-norm", "coarea"})
    EXPECT_NE(verify::find_suite(name), nullptr) << name;
  EXPECT_EQ(verify::find_suite("no-such-suite"), nullptr);
}

}  // namespace
}  // namespace gmt::testing
