#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "seqauction/evaluation.hpp"
#include "seqauction/quasilinear.hpp"

namespace seqauction {
namespace {

using testing::pair_instance;

constexpr double kTol = 1e-9;

TEST(QValue, PairExampleRoot) {
  const auto instance = pair_instance();
  const auto pi = solve_quasilinear(instance);

  // Bid 1 at the root, then the best continuation: the oracle recursion gives
  // the same number without going through q_value.
  const double expected = testing::oracle_policy_value(instance, [](int t, ItemMask s, Money) {
    if (t == 0) return Money{1};
    return s ? Money{2} : Money{0};
  });
  EXPECT_NEAR(expected, 0.5, kTol);
  EXPECT_NEAR(q_value(instance, pi.values[1], {0, 0}, 1), expected, kTol);
  EXPECT_NEAR(q_value(instance, pi.values[1], {0, 0}, 0), 0.0, kTol);
}

TEST(QValue, PairExampleAfterWinningFirstItem) {
  const auto instance = pair_instance();
  const auto pi = solve_quasilinear(instance);
  EXPECT_NEAR(q_value(instance, pi.values[2], {1, 0b01}, 2), 2.0, kTol);
}

TEST(QValue, RejectsBadStates) {
  const auto instance = pair_instance();
  const auto pi = solve_quasilinear(instance);
  EXPECT_THROW(q_value(instance, pi.values[2], {2, 0}, 0), DomainError);
  EXPECT_THROW(q_value(instance, pi.values[1], {0, 0b1}, 0), DomainError);
}

TEST(BidUpperBound, PairExample) {
  const auto pi = solve_quasilinear(pair_instance());
  EXPECT_EQ(bid_upper_bound(pi, {1, 0b01}), 4);
  EXPECT_EQ(bid_upper_bound(pi, {1, 0}), 0);
  EXPECT_EQ(bid_upper_bound(3.5, 3.5), 0);
  EXPECT_EQ(bid_upper_bound(2.0, 5.0), 0);
  EXPECT_EQ(bid_upper_bound(7.9, 0.0), 7);
}

TEST(SolveQuasilinear, PairExample) {
  const auto pi = solve_quasilinear(pair_instance());
  EXPECT_NEAR(pi.root_value(), 0.5, kTol);
  EXPECT_EQ(pi.bid({0, 0}), 1);
  EXPECT_EQ(pi.bid({1, 0b01}), 2);
  EXPECT_EQ(pi.bid({1, 0}), 0);
  EXPECT_NEAR(pi.value({1, 0b01}), 2.0, kTol);
  EXPECT_NEAR(pi.value({1, 0}), 0.0, kTol);
}

TEST(SolveQuasilinear, ZeroValuationNeverBids) {
  auto instance = pair_instance();
  instance.valuation = Valuation::bundles(2, {});
  const auto pi = solve_quasilinear(instance);
  for (const auto& row : pi.bids) {
    for (Money z : row) EXPECT_EQ(z, 0);
  }
  for (const auto& row : pi.values) {
    for (double v : row) EXPECT_EQ(v, 0.0);
  }
}

TEST(SolveQuasilinear, RejectsInvalidInstance) {
  auto instance = pair_instance();
  instance.models[0] = OpponentBidModel({{1, 0.3}});
  EXPECT_THROW(solve_quasilinear(instance), ValidationError);
}

TEST(SolveQuasilinear, TableSizes) {
  std::mt19937_64 rng(3);
  const auto instance = testing::random_instance(rng, {10, 10, 4, 20});
  const auto pi = solve_quasilinear(instance);
  ASSERT_EQ(pi.values.size(), 11u);
  ASSERT_EQ(pi.bids.size(), 10u);
  for (int t = 0; t <= 10; ++t) EXPECT_EQ(pi.values[t].size(), subset_count(t));
  for (int t = 0; t < 10; ++t) EXPECT_EQ(pi.bids[t].size(), subset_count(t));
  EXPECT_EQ(pi.state_count(), (std::size_t{1} << 11) - 1);
}

class RandomInstances : public ::testing::TestWithParam<bool> {};

TEST_P(RandomInstances, BellmanOptimalityAndConsistency) {
  std::mt19937_64 rng(GetParam() ? 101 : 202);
  for (int trial = 0; trial < 60; ++trial) {
    testing::RandomInstanceSpec spec{1, 6, 6, 15, 40.0, GetParam()};
    const auto instance = testing::random_instance(rng, spec);
    const auto pi = solve_quasilinear(instance);
    const auto terminal = instance.valuation.tabulate();

    for (int t = 0; t < instance.items; ++t) {
      const Money top = max_meaningful_bid(instance.models[t]);
      for (ItemMask s = 0; s < subset_count(t); ++s) {
        const QState state{t, s};
        for (Money z = 0; z <= top + 2; ++z) {
          EXPECT_GE(pi.value(state) + kTol, q_value(instance, pi.values[t + 1], state, z));
        }
        EXPECT_LE(pi.bid(state), std::min(bid_upper_bound(pi, state), top));
        if (!GetParam()) {  // bundle valuations are monotone
          EXPECT_GE(pi.value(state) + kTol, terminal[s]);
        }
      }
    }

    const double oracle = testing::oracle_policy_value(
        instance, [&](int t, ItemMask s, Money) { return pi.bid({t, s}); });
    EXPECT_NEAR(oracle, pi.root_value(), kTol);
    EXPECT_NEAR(exact_eval(instance, make_policy(pi)).expected_utility, pi.root_value(), kTol);
  }
}

INSTANTIATE_TEST_SUITE_P(BundleAndTable, RandomInstances, ::testing::Values(false, true));

TEST(SolveQuasilinear, Deterministic) {
  std::mt19937_64 rng(5);
  const auto instance = testing::random_instance(rng, {6, 6, 8, 25});
  const auto a = solve_quasilinear(instance);
  const auto b = solve_quasilinear(instance);
  EXPECT_EQ(a.bids, b.bids);
  EXPECT_EQ(a.values, b.values);
}

}  // namespace
}  // namespace seqauction
