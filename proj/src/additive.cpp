#include "seqauction/additive.hpp"

#include <algorithm>
#include <cmath>

#include "seqauction/detail/bellman.hpp"

namespace seqauction {

namespace {

// Largest grid we are willing to allocate for one solve, in cells.
constexpr std::uint64_t kMaxGridCells = std::uint64_t{1} << 28;

}  // namespace

std::vector<AState> AStrategy::states(int stage) const {
  std::vector<AState> out;
  out.push_back({stage, 0, endowment});
  for (ItemMask subset = 1; subset < subset_count(stage); ++subset) {
    for (Money d = 0; d <= endowment; ++d) out.push_back({stage, subset, d});
  }
  return out;
}

std::uint64_t additive_state_count(int items, Money endowment, int stage) {
  if (stage < 0 || stage > items || endowment < 0) {
    throw DomainError("additive_state_count needs 0 <= t <= n and m >= 0");
  }
  return (subset_count(stage) - 1) * static_cast<std::uint64_t>(endowment + 1) + 1;
}

AStrategy solve_additive(const ProblemInstance& instance, Money endowment,
                         const MoneyUtility& money_utility, AdditiveOptions options) {
  require_valid(instance);
  if (endowment < 0) throw DomainError("endowment must be >= 0");
  if (!money_utility.is_monotone()) throw DomainError("money utility must be non-decreasing");

  const int n = instance.items;
  const auto width = static_cast<std::size_t>(endowment + 1);
  if (static_cast<std::uint64_t>(subset_count(n)) * width > kMaxGridCells) {
    throw CapacityError("additive grid of 2^" + std::to_string(n) + " x " +
                        std::to_string(width) + " cells is too large");
  }

  AStrategy out;
  out.items = n;
  out.endowment = endowment;
  out.values.resize(n + 1);
  out.bids.resize(n);

  const auto terminal = instance.valuation.tabulate();
  std::vector<double> leftover(width);
  for (Money d = 0; d <= endowment; ++d) leftover[d] = money_utility(d);
  auto& last = out.values[n];
  last.resize(subset_count(n) * width);
  for (ItemMask subset = 0; subset < subset_count(n); ++subset) {
    for (std::size_t d = 0; d < width; ++d) last[subset * width + d] = terminal[subset] + leftover[d];
  }

  Money valuation_cap = 0;
  if (options.cap == AdditiveBidCap::Valuation) {
    valuation_cap = static_cast<Money>(std::floor(*std::max_element(terminal.begin(), terminal.end())));
  }

  std::vector<double> q;
  for (int t = n - 1; t >= 0; --t) {
    const auto cdf = instance.models[t].cdf_table();
    const Money support_cap = static_cast<Money>(cdf.size()) - 1;
    const Money item_cap = options.cap == AdditiveBidCap::Support ? support_cap : valuation_cap;
    const auto& next = out.values[t + 1];
    auto& values = out.values[t];
    auto& bids = out.bids[t];
    values.resize(subset_count(t) * width);
    bids.resize(subset_count(t) * width);

    for (ItemMask subset = 0; subset < subset_count(t); ++subset) {
      const double* win_row = next.data() + (subset | item_bit(t)) * width;
      const double* lose_row = next.data() + subset * width;
      for (Money d = 0; d <= endowment; ++d) {
        const Money cap = std::min(d, item_cap);
        const double lose = lose_row[d];
        q.resize(static_cast<std::size_t>(cap) + 1);
        for (Money z = 0; z <= cap; ++z) {
          // bids past max support win with certainty
          const double p = z <= support_cap ? cdf[static_cast<std::size_t>(z)] : 1.0;
          q[static_cast<std::size_t>(z)] = p * win_row[d - z] + (1.0 - p) * lose;
        }
        const auto best = detail::smallest_argmax(q);
        values[subset * width + d] = best.value;
        bids[subset * width + d] = best.bid;
      }
    }
  }
  return out;
}

}  // namespace seqauction
