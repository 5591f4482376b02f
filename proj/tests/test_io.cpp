#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "seqauction/io.hpp"

namespace seqauction {
namespace {

using testing::pair_instance;

constexpr double kTol = 1e-9;

json pair_json() {
  return json::parse(R"({
    "items": 2,
    "distributions": [ {"pmf": [[1, 0.5], [2, 0.5]]}, {"pmf": [[1, 0.5], [2, 0.5]]} ],
    "valuation": {"type": "bundles", "bundles": [ {"items": [0, 1], "value": 4} ]},
    "endowment": 4
  })");
}

TEST(InstanceJson, ParsesPairExample) {
  const auto instance = instance_from_json(pair_json());
  EXPECT_EQ(instance.items, 2);
  EXPECT_EQ(instance.endowment, 4);
  EXPECT_FALSE(instance.budget.has_value());
  EXPECT_TRUE(validate_instance(instance).empty());
  EXPECT_EQ(instance.valuation.tabulate(), pair_instance().valuation.tabulate());
  EXPECT_EQ(win_probability(instance.models[1], 1), 0.5);
}

TEST(InstanceJson, RoundTripPreservesEverything) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    auto instance = testing::random_instance(rng, {1, 6, 5, 20, 50.0, trial % 2 == 0});
    if (trial % 3 == 0) instance.budget = trial;
    if (trial % 4 == 0) instance.endowment = 2 * trial;
    const auto back = instance_from_json(json::parse(to_json(instance).dump()));
    ASSERT_EQ(back.items, instance.items);
    EXPECT_EQ(back.endowment, instance.endowment);
    EXPECT_EQ(back.budget, instance.budget);
    EXPECT_EQ(back.valuation.tabulate(), instance.valuation.tabulate());
    EXPECT_EQ(back.valuation.form.index(), instance.valuation.form.index());
    for (int i = 0; i < instance.items; ++i) {
      const auto& a = instance.models[i].pmf();
      const auto& b = back.models[i].pmf();
      ASSERT_EQ(a.size(), b.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].value, b[k].value);
        EXPECT_EQ(a[k].probability, b[k].probability);
      }
    }
  }
}

TEST(InstanceJson, SchemaErrors) {
  auto doc = pair_json();
  doc.erase("items");
  EXPECT_THROW(instance_from_json(doc), ValidationError);

  doc = pair_json();
  doc["items"] = "two";
  EXPECT_THROW(instance_from_json(doc), ValidationError);

  doc = pair_json();
  doc["distributions"][0]["pmf"] = json::array({json::array({1})});
  EXPECT_THROW(instance_from_json(doc), ValidationError);

  doc = pair_json();
  doc["valuation"]["type"] = "additive";
  EXPECT_THROW(instance_from_json(doc), ValidationError);

  doc = pair_json();
  doc["valuation"]["bundles"][0]["items"] = json::array({0, 30});
  EXPECT_THROW(instance_from_json(doc), ValidationError);

  doc["valuation"]["bundles"][0]["items"] = json::array({0, 5});
  const auto violations = validate_instance(instance_from_json(doc));
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].rule, "bundle-domain");

  doc = pair_json();
  doc["valuation"] = json::parse(R"({"type": "table", "entries": [[0, 0], [3, 4]]})");
  EXPECT_THROW(instance_from_json(doc), ValidationError);

  EXPECT_THROW(instance_from_json(json::array()), ValidationError);
  EXPECT_THROW(load_instance("/nonexistent/instance.json"), ValidationError);
}

TEST(InstanceJson, SemanticProblemsAreLeftToValidation) {
  auto doc = pair_json();
  doc["distributions"][0]["pmf"] = json::parse("[[1, 0.5], [2, 0.4]]");
  const auto instance = instance_from_json(doc);
  EXPECT_EQ(validate_instance(instance).size(), 1u);
}

TEST(StrategyJson, QuasilinearRoundTrip) {
  const auto instance = pair_instance();
  const auto pi = solve_quasilinear(instance);
  const auto doc = to_json(pi);
  EXPECT_EQ(doc["mode"], "quasilinear");
  EXPECT_EQ(doc["stages"].size(), 2u);
  EXPECT_EQ(doc["stages"][1]["entries"].size(), 2u);
  EXPECT_EQ(doc["stages"][1]["entries"][1]["bid"], 2);

  const auto back = qstrategy_from_json(doc, instance);
  EXPECT_EQ(back.bids, pi.bids);
  EXPECT_NEAR(back.root_value(), pi.root_value(), kTol);

  const auto loaded = strategy_from_json(doc, instance);
  EXPECT_EQ(loaded.mode, "quasilinear");
  EXPECT_NEAR(exact_eval(instance, loaded.policy, loaded.utility).expected_utility, 0.5, kTol);
}

TEST(StrategyJson, AdditiveProratedTrivialExecute) {
  const auto instance = pair_instance();
  const auto pi = solve_quasilinear(instance);

  const auto additive = strategy_from_json(to_json(solve_additive(instance, 4, {})), instance);
  EXPECT_EQ(additive.mode, "additive");
  EXPECT_NEAR(exact_eval(instance, additive.policy, additive.utility).expected_utility, 4.5, kTol);

  const auto prorated_doc = to_json(solve_prorated(instance, pi, 2));
  EXPECT_EQ(prorated_doc["certified_max_payment"], 2);
  EXPECT_EQ(prorated_doc["stages"][1]["entries"][1]["z_max"], 1);
  const auto prorated = strategy_from_json(prorated_doc, instance);
  EXPECT_NEAR(exact_eval(instance, prorated.policy).expected_utility, 0.25, kTol);

  const auto trivial = strategy_from_json(trivial_to_json(pi, 2), instance);
  EXPECT_EQ(trivial.mode, "trivial");
  EXPECT_NEAR(exact_eval(instance, trivial.policy).expected_utility, 0.25, kTol);
}

TEST(StrategyJson, AdditiveRootOnly) {
  const auto instance = pair_instance();
  const auto doc = to_json(solve_additive(instance, 4, {}), true);
  EXPECT_EQ(doc["bid"], 1);
  EXPECT_NEAR(doc["value"].get<double>(), 4.5, kTol);
  EXPECT_FALSE(doc.contains("stages"));
  EXPECT_THROW(strategy_from_json(doc, instance), ValidationError);
}

TEST(StrategyJson, Mismatches) {
  const auto instance = pair_instance();
  auto doc = to_json(solve_quasilinear(instance));

  std::mt19937_64 rng(73);
  const auto other = testing::random_instance(rng, {3, 3, 2, 4});
  EXPECT_THROW(strategy_from_json(doc, other), MismatchError);

  auto missing_stage = doc;
  missing_stage.erase("items");
  missing_stage["stages"].erase(1);
  EXPECT_THROW(strategy_from_json(missing_stage, instance), MismatchError);

  auto short_stage = doc;
  short_stage["stages"][1]["entries"].erase(0);
  EXPECT_THROW(strategy_from_json(short_stage, instance), ValidationError);

  auto unknown = doc;
  unknown["mode"] = "greedy";
  EXPECT_THROW(strategy_from_json(unknown, instance), ValidationError);
}

TEST(ReportJson, Fields) {
  const auto instance = pair_instance();
  const auto report = exact_eval(instance, make_policy(solve_quasilinear(instance)));
  const auto doc = to_json(report);
  EXPECT_NEAR(doc["expected_utility"].get<double>(), 0.5, kTol);
  EXPECT_EQ(doc["max_payment"], 3);
  EXPECT_EQ(doc["path_count"], 4);

  const auto mc = to_json(MCReport{0.25, 0.01, 100, 7});
  EXPECT_EQ(mc["samples"], 100);
  EXPECT_EQ(mc["seed"], 7);
}

}  // namespace
}  // namespace seqauction
