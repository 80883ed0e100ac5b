#include "catalan_lab/verify.hpp"

#include <sstream>

#include "catalan_lab/errors.hpp"
#include "gtest/gtest.h"

using namespace catalan_lab;

TEST(VerifyReport, RecordsFailures) {
  VerifyReport r;
  r.suite = "demo";
  r.expect_eq("one", 1, 1);
  r.expect_eq("two", 2, 3);
  r.expect("three", false);
  EXPECT_EQ(r.cases_run, 3u);
  ASSERT_EQ(r.failures.size(), 2u);
  EXPECT_EQ(r.failures[0].input, "two");
  EXPECT_EQ(r.failures[0].expected, "2");
  EXPECT_EQ(r.failures[0].got, "3");
  EXPECT_EQ(r.failures[1].got, "false");
  EXPECT_FALSE(r.passed());
  std::ostringstream os;
  r.print(os);
  EXPECT_EQ(os.str(),
            "suite demo: 3 cases, 2 failures [FAIL]\n"
            "  FAIL two: expected 2, got 3\n"
            "  FAIL three: expected true, got false\n");
}

TEST(VerifyReport, Merge) {
  VerifyReport a;
  VerifyReport b;
  a.expect("x", true);
  b.expect("y", false);
  a.merge(b);
  EXPECT_EQ(a.cases_run, 2u);
  EXPECT_EQ(a.failures.size(), 1u);
}

TEST(Suites, PassAtSmallSizes) {
  for (const auto& r : {verify_bijections(6), verify_transport(7), verify_distributions(8),
                        verify_identities(100)}) {
    std::ostringstream os;
    r.print(os);
    EXPECT_TRUE(r.passed()) << os.str();
    EXPECT_GT(r.cases_run, 0u);
  }
}

TEST(Suites, RefuseAboveCap) {
  EXPECT_THROW(verify_bijections(kBijectionsCap + 1), LimitError);
  EXPECT_THROW(verify_transport(kTransportCap + 1), LimitError);
  EXPECT_THROW(verify_distributions(kDistributionsCap + 1), LimitError);
  EXPECT_THROW(verify_identities(kIdentitiesCap + 1), LimitError);
}
