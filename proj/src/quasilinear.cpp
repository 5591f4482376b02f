#include "seqauction/quasilinear.hpp"

#include <algorithm>
#include <cmath>

#include "seqauction/detail/bellman.hpp"

namespace seqauction {

namespace {

void check_state(int items, QState state) {
  if (state.stage < 0 || state.stage >= items) {
    throw DomainError("stage " + std::to_string(state.stage) + " has no auction");
  }
  if ((state.subset & ~full_mask(state.stage)) != 0) {
    throw DomainError("subset holds items not yet auctioned at stage " +
                      std::to_string(state.stage));
  }
}

}  // namespace

std::size_t QStrategy::state_count() const {
  std::size_t total = 0;
  for (const auto& row : values) total += row.size();
  return total;
}

double q_value(const ProblemInstance& instance, std::span<const double> next_values,
               QState state, Money bid) {
  check_state(instance.items, state);
  const double win = next_values[state.subset | item_bit(state.stage)];
  const double lose = next_values[state.subset];
  const double p = win_probability(instance.models[state.stage], bid);
  return p * (win - static_cast<double>(bid)) + (1.0 - p) * lose;
}

Money bid_upper_bound(double win_value, double lose_value) {
  const double gap = std::floor(win_value - lose_value);
  return gap > 0.0 ? static_cast<Money>(gap) : 0;
}

Money bid_upper_bound(const QStrategy& strategy, QState state) {
  check_state(strategy.items, state);
  const auto& next = strategy.values[state.stage + 1];
  return bid_upper_bound(next[state.subset | item_bit(state.stage)], next[state.subset]);
}

QStrategy solve_quasilinear(const ProblemInstance& instance) {
  require_valid(instance);
  const int n = instance.items;

  QStrategy out;
  out.items = n;
  out.values.resize(n + 1);
  out.bids.resize(n);
  out.values[n] = instance.valuation.tabulate();

  std::vector<double> q;
  for (int t = n - 1; t >= 0; --t) {
    const auto cdf = instance.models[t].cdf_table();
    const Money support_cap = static_cast<Money>(cdf.size()) - 1;
    const auto& next = out.values[t + 1];
    auto& values = out.values[t];
    auto& bids = out.bids[t];
    values.resize(subset_count(t));
    bids.resize(subset_count(t));

    for (ItemMask subset = 0; subset < subset_count(t); ++subset) {
      const double win = next[subset | item_bit(t)];
      const double lose = next[subset];
      const Money cap = std::min(bid_upper_bound(win, lose), support_cap);
      q.resize(static_cast<std::size_t>(cap) + 1);
      for (Money z = 0; z <= cap; ++z) {
        const double p = cdf[static_cast<std::size_t>(z)];
        q[static_cast<std::size_t>(z)] = p * (win - static_cast<double>(z)) + (1.0 - p) * lose;
      }
      const auto best = detail::smallest_argmax(q);
      bids[subset] = best.bid;
      values[subset] = best.value;
    }
  }
  return out;
}

}  // namespace seqauction
