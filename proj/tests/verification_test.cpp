#include <gtest/gtest.h>

#include <random>

#include "treecycles/error.hpp"
#include "treecycles/verification.hpp"

namespace treecycles {
namespace {

TEST(Formulas, TreeCounts) {
  const std::vector<std::int64_t> trees = {1, 3, 15, 105, 945, 10395};
  const std::vector<std::int64_t> balanced = {1, 2, 6, 24, 120, 720};
  for (int g = 3; g <= 8; ++g) {
    EXPECT_EQ(expected_tree_count(g), trees[static_cast<std::size_t>(g - 3)]);
    EXPECT_EQ(expected_balanced_count(g), balanced[static_cast<std::size_t>(g - 3)]);
  }
}

TEST(Formulas, Poincare) {
  EXPECT_EQ(poincare_coefficients(2), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(poincare_coefficients(4), (std::vector<std::int64_t>{1, 6, 11, 6}));
  EXPECT_EQ(poincare_coefficients(6), (std::vector<std::int64_t>{1, 15, 85, 225, 274, 120}));
}

TEST(UniformIndex, StaysInRangeAndCoversIt) {
  std::mt19937_64 rng(3);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = uniform_index(rng, 7);
    ASSERT_LT(v, 7U);
    ++seen[v];
  }
  for (int c : seen) EXPECT_GT(c, 800);
  std::mt19937_64 a(9);
  std::mt19937_64 b(9);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(uniform_index(a, 1000003), uniform_index(b, 1000003));
}

TEST(Suites, Counts) {
  const SuiteReport r = verify_counts(6);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases, 105 + 24);
  EXPECT_THROW(verify_counts(2), DomainError);
  EXPECT_THROW(verify_counts(9), DomainError);
  VerifyOptions wide;
  wide.counts_ceiling = 9;
  EXPECT_TRUE(verify_counts(9, wide).passed());
}

TEST(Suites, Duality) {
  for (int g = 3; g <= 6; ++g) EXPECT_TRUE(verify_duality(g).passed()) << g;
  EXPECT_THROW(verify_duality(8), DomainError);
}

TEST(Suites, RelationsExhaustive) {
  const SuiteReport r4 = verify_relations(4, 0);
  EXPECT_TRUE(r4.passed());
  // ((1,2),3) has one internal child at the root, and so do its two rotations.
  EXPECT_EQ(r4.cases, 3);
  EXPECT_TRUE(verify_relations(5, 0).passed());
}

TEST(Suites, RelationsSampledIsDeterministic) {
  VerifyOptions one;
  one.seed = 11;
  VerifyOptions many = one;
  many.threads = 4;
  const SuiteReport a = verify_relations(7, 500, one);
  const SuiteReport b = verify_relations(7, 500, many);
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(a.cases, 500);
  EXPECT_EQ(a.cases, b.cases);
}

TEST(Suites, Crosspath) {
  const SuiteReport r = verify_crosspath(6);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases, 105);
}

TEST(Suites, Arnold) {
  for (int n = 2; n <= 5; ++n) EXPECT_TRUE(verify_arnold(n).passed()) << n;
  EXPECT_THROW(verify_arnold(1), DomainError);
  EXPECT_THROW(verify_arnold(7), DomainError);
}

TEST(Suites, Dispatch) {
  EXPECT_EQ(run_suite("counts", 5).suite, "counts");
  EXPECT_EQ(run_suite("arnold", 3).param, 3);
  EXPECT_THROW(run_suite("bogus", 5), DomainError);
}

TEST(Report, JsonSchema) {
  SuiteReport r{"duality", 5, 36, {nlohmann::json{{"k", {1, 2, 1}}}}, 12};
  const nlohmann::json j = report_to_json(r);
  EXPECT_EQ(j.size(), 5U);
  EXPECT_EQ(j["suite"], "duality");
  EXPECT_EQ(j["param"], 5);
  EXPECT_EQ(j["cases"], 36);
  EXPECT_EQ(j["millis"], 12);
  ASSERT_EQ(j["failures"].size(), 1U);
  EXPECT_FALSE(r.passed());
}

}  // namespace
}  // namespace treecycles
