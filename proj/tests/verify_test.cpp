#include <gtest/gtest.h>

#include "piset/verify.hpp"

TEST(SmallSubsets, Counts) {
  EXPECT_EQ(piset::small_subsets(2, 12, 3).size(), 231u);
  EXPECT_EQ(piset::small_subsets(1, 4, 4).size(), 15u);
  const auto s = piset::small_subsets(2, 4, 2);
  EXPECT_EQ(s, (std::vector<std::vector<std::uint64_t>>{{2}, {2, 3}, {2, 4}, {3}, {3, 4}, {4}}));
}

TEST(ReproductionSuite, AllPassAndDeterministic) {
  const auto a = piset::run_reproduction_suite();
  for (const auto& c : a.checks) EXPECT_NE(c.status, piset::CheckStatus::Fail) << c.name << ": " << c.detail;
  EXPECT_TRUE(a.all_passed());
  EXPECT_EQ(a.count(piset::CheckStatus::Skip), 0u);

  const auto b = piset::run_reproduction_suite();
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].detail, b.checks[i].detail);
  }
}

TEST(ReproductionSuite, SmallCapSkipsEnumeration) {
  const auto r = piset::run_reproduction_suite({.cap = 1000});
  EXPECT_TRUE(r.all_passed());
  EXPECT_GE(r.count(piset::CheckStatus::Skip), 3u);
}
