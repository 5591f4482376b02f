#pragma once

// Test-only reference computations. Nothing here calls into the solvers or
// the evaluation module; each routine recomputes its answer from the
// instance's raw pmf and valuation.

#include <functional>
#include <random>
#include <vector>

#include "seqauction/core.hpp"

namespace seqauction::testing {

/// P(opposing bid <= bid), summed straight from the pmf.
double oracle_win_probability(const OpponentBidModel& model, Money bid);

/// v(S) by scanning bundles or reading the table.
double oracle_valuation(const ProblemInstance& instance, ItemMask subset);

using BidRule = std::function<Money(int stage, ItemMask subset, Money paid)>;

/// Expected quasi-linear utility of a bidding rule by plain recursion
/// over win/lose outcomes.
double oracle_policy_value(const ProblemInstance& instance, const BidRule& rule);

/// Optimal additive value from <empty, m>^0 with f = identity, searching
/// every bid 0..d at every state with no support cap. Exponential.
double oracle_additive_optimum(const ProblemInstance& instance, Money endowment);

/// Number of (subset, money) pairs reachable at stage t from <empty, m>^0
/// when any bid 0..d may be placed and either outcome may occur.
std::uint64_t oracle_reachable_additive_states(int stage, Money endowment);

/// Two items, opponents bid 1 or 2 with equal probability, only the pair is
/// worth 4.
ProblemInstance pair_instance();

struct RandomInstanceSpec {
  int min_items = 1;
  int max_items = 4;
  int max_support_points = 5;  // per item
  Money max_support_value = 10;
  double max_bundle_value = 30.0;
  bool explicit_table = false;  // otherwise random bundles
};

ProblemInstance random_instance(std::mt19937_64& rng, const RandomInstanceSpec& spec);

}  // namespace seqauction::testing
