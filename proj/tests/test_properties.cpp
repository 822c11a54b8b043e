#include <gtest/gtest.h>

#include "properties.hpp"

namespace zonoforge {
namespace {

using testing::PropertyCase;

const std::vector<PropertyCase>& cases() {
  static const auto all = testing::property_cases(testing::kPropertySeed, testing::kPropertyCases);
  return all;
}

class Properties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(Properties, HoldsOnEveryCase) {
  const auto& p = testing::properties()[GetParam()];
  const auto t = testing::run_property(p, cases());
  for (const auto& f : t.failures) ADD_FAILURE() << p.name << ": " << f;
  EXPECT_GT(t.passed, 0u) << p.name << " was never exercised";
  RecordProperty("passed", static_cast<int>(t.passed));
  RecordProperty("skipped", static_cast<int>(t.skipped));
}

INSTANTIATE_TEST_SUITE_P(Suite, Properties, ::testing::Range<std::size_t>(0, testing::properties().size()));

TEST(PropertyCases, CoverBothDimensionsAndEnoughConfigurations) {
  EXPECT_GE(cases().size(), 50u);
  std::size_t two = 0, three = 0, coloop_free = 0;
  for (const auto& pc : cases()) {
    (pc.config.n == 2 ? two : three) += 1;
    if (coloops(pc.config).empty()) ++coloop_free;
  }
  EXPECT_GT(two, 10u);
  EXPECT_GT(three, 10u);
  EXPECT_GT(coloop_free, 10u);
}

TEST(PropertyCases, DrawingIsDeterministic) {
  const auto again = testing::property_cases(testing::kPropertySeed, 5);
  for (std::size_t k = 0; k < again.size(); ++k) {
    EXPECT_EQ(again[k].config.columns, cases()[k].config.columns);
    EXPECT_EQ(again[k].points, cases()[k].points);
    EXPECT_EQ(again[k].perm, cases()[k].perm);
  }
}

}  // namespace
}  // namespace zonoforge
