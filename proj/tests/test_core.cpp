#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "seqauction/core.hpp"

namespace seqauction {
namespace {

using testing::pair_instance;

bool has_rule(const std::vector<Violation>& violations, const std::string& rule) {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

TEST(WinProbability, PairExampleModel) {
  const auto model = pair_instance().models[0];
  EXPECT_DOUBLE_EQ(win_probability(model, 1), 0.5);
  EXPECT_DOUBLE_EQ(win_probability(model, 2), 1.0);
  EXPECT_DOUBLE_EQ(win_probability(model, 0), 0.0);
  EXPECT_DOUBLE_EQ(win_probability(model, 7), 1.0);
}

TEST(WinProbability, MonotoneAndSaturatesOnRandomModels) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto instance = testing::random_instance(rng, {1, 3, 8, 30});
    for (const auto& model : instance.models) {
      const Money lo = model.pmf().front().value;
      const Money hi = max_meaningful_bid(model);
      double previous = 0.0;
      for (Money z = 0; z <= hi + 3; ++z) {
        const double w = win_probability(model, z);
        EXPECT_GE(w, previous);
        if (z < lo) EXPECT_EQ(w, 0.0);
        if (z >= hi) EXPECT_EQ(w, 1.0);
        previous = w;
      }
      const auto cdf = model.cdf_table();
      ASSERT_EQ(cdf.size(), static_cast<std::size_t>(hi) + 1);
      for (Money z = 0; z <= hi; ++z) EXPECT_EQ(cdf[z], win_probability(model, z));
    }
  }
}

TEST(MaxMeaningfulBid, Examples) {
  EXPECT_EQ(max_meaningful_bid(pair_instance().models[0]), 2);
  EXPECT_EQ(max_meaningful_bid(OpponentBidModel::uniform(0, 100)), 100);
  EXPECT_EQ(max_meaningful_bid(OpponentBidModel::point(0)), 0);
}

TEST(Valuation, PairExampleAllOrNothing) {
  const auto& v = pair_instance().valuation;
  EXPECT_EQ(evaluate_valuation(v, 0b11), 4.0);
  EXPECT_EQ(evaluate_valuation(v, 0b01), 0.0);
  EXPECT_EQ(evaluate_valuation(v, 0b10), 0.0);
  EXPECT_EQ(evaluate_valuation(v, 0), 0.0);
}

TEST(Valuation, SubsetOutOfRangeIsDomainError) {
  const auto& v = pair_instance().valuation;
  EXPECT_THROW(evaluate_valuation(v, 0b100), DomainError);
  const auto table = Valuation::table(1, {0.0, 2.0});
  EXPECT_EQ(evaluate_valuation(table, 1), 2.0);
  EXPECT_THROW(evaluate_valuation(table, 2), DomainError);
}

TEST(Valuation, BundleMaxTabulationMatchesDirectEvaluation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto instance = testing::random_instance(rng, {1, 10, 2, 3, 50.0});
    const auto table = instance.valuation.tabulate();
    ASSERT_EQ(table.size(), subset_count(instance.items));
    for (ItemMask s = 0; s < table.size(); ++s) {
      ASSERT_EQ(table[s], evaluate_valuation(instance.valuation, s));
    }
  }
}

TEST(Valuation, BundleMaxIsMonotone) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const auto instance = testing::random_instance(rng, {1, 8, 2, 3, 50.0});
    const auto& v = instance.valuation;
    for (ItemMask s = 0; s < subset_count(instance.items); ++s) {
      for (int i = 0; i < instance.items; ++i) {
        EXPECT_LE(evaluate_valuation(v, s), evaluate_valuation(v, s | item_bit(i)));
      }
    }
  }
}

TEST(MoneyUtility, IdentityAndTable) {
  const auto id = MoneyUtility::identity();
  EXPECT_EQ(id(17), 17.0);
  EXPECT_TRUE(id.is_monotone());

  const auto f = MoneyUtility::tabulated({0.0, 1.0, 1.5});
  EXPECT_EQ(f(2), 1.5);
  EXPECT_THROW(f(3), DomainError);
  EXPECT_THROW(f(-1), DomainError);
  EXPECT_FALSE(MoneyUtility::tabulated({0.0, 2.0, 1.0}).is_monotone());
}

TEST(ValidateInstance, PairExampleIsValid) {
  EXPECT_TRUE(validate_instance(pair_instance()).empty());
}

TEST(ValidateInstance, ProbabilitySumViolation) {
  auto instance = pair_instance();
  instance.models[1] = OpponentBidModel({{1, 0.5}, {2, 0.4}});
  const auto violations = validate_instance(instance);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].rule, "probability-sum");
  EXPECT_EQ(violations[0].field, "distributions[1]");
  EXPECT_THROW(require_valid(instance), ValidationError);
}

TEST(ValidateInstance, EmptySetValueViolation) {
  auto instance = pair_instance();
  instance.valuation = Valuation::table(2, {3.0, 0.0, 0.0, 4.0});
  const auto violations = validate_instance(instance);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].rule, "empty-set");

  instance.valuation = Valuation::bundles(2, {{0, 3.0}});
  EXPECT_TRUE(has_rule(validate_instance(instance), "empty-set"));
}

TEST(ValidateInstance, StructuralViolations) {
  auto instance = pair_instance();
  instance.items = 0;
  EXPECT_TRUE(has_rule(validate_instance(instance), "range"));

  instance = pair_instance();
  instance.models.pop_back();
  EXPECT_TRUE(has_rule(validate_instance(instance), "length"));

  instance = pair_instance();
  instance.models[0] = OpponentBidModel({{2, 0.5}, {1, 0.5}});
  EXPECT_TRUE(has_rule(validate_instance(instance), "value-order"));

  instance = pair_instance();
  instance.models[0] = OpponentBidModel({{-1, 1.0}});
  EXPECT_TRUE(has_rule(validate_instance(instance), "value-nonnegative"));

  instance = pair_instance();
  instance.models[0] = OpponentBidModel({{1, 1.5}, {2, -0.5}});
  EXPECT_TRUE(has_rule(validate_instance(instance), "probability-range"));

  instance = pair_instance();
  instance.valuation = Valuation::table(2, {0.0, 1.0});
  EXPECT_TRUE(has_rule(validate_instance(instance), "table-coverage"));

  instance = pair_instance();
  instance.valuation = Valuation::bundles(2, {{0b100, 1.0}});
  EXPECT_TRUE(has_rule(validate_instance(instance), "bundle-domain"));

  instance = pair_instance();
  instance.valuation = Valuation::bundles(3, {{0b11, 1.0}});
  EXPECT_TRUE(has_rule(validate_instance(instance), "domain"));

  instance = pair_instance();
  instance.endowment = -1;
  instance.budget = -2;
  const auto violations = validate_instance(instance);
  EXPECT_EQ(violations.size(), 2u);

  instance = pair_instance();
  instance.money_utility = MoneyUtility::tabulated({1.0, 0.0});
  EXPECT_TRUE(has_rule(validate_instance(instance), "monotone"));
}

}  // namespace
}  // namespace seqauction
