#pragma once

#include <cstdint>
#include <vector>

#include "seqauction/core.hpp"

namespace seqauction {

/// Stage t holding `subset` with `money` left. The empty subset only occurs
/// with the full endowment.
struct AState {
  int stage = 0;
  ItemMask subset = 0;
  Money money = 0;
};

enum class AdditiveBidCap {
  Support,    // z <= min(d, max support of the item's model)
  Valuation,  // z <= min(d, floor(max subset value))
};

struct AdditiveOptions {
  AdditiveBidCap cap = AdditiveBidCap::Support;
};

/// Optimal strategy under additive utility v(S) + f(d), tabulated on the full
/// money grid 0..endowment. Row t is indexed by subset * (endowment + 1) + d.
struct AStrategy {
  int items = 0;
  Money endowment = 0;
  std::vector<std::vector<double>> values;  // t = 0..n
  std::vector<std::vector<Money>> bids;     // t = 0..n-1

  std::size_t index(ItemMask subset, Money money) const {
    return static_cast<std::size_t>(subset) * static_cast<std::size_t>(endowment + 1) +
           static_cast<std::size_t>(money);
  }
  double value(AState s) const { return values[s.stage][index(s.subset, s.money)]; }
  Money bid(AState s) const { return bids[s.stage][index(s.subset, s.money)]; }
  double root_value() const { return value({0, 0, endowment}); }

  /// Grid cells at stage t that are genuine states (empty subset only at d = m).
  std::vector<AState> states(int stage) const;
};

AStrategy solve_additive(const ProblemInstance& instance, Money endowment,
                         const MoneyUtility& money_utility, AdditiveOptions options = {});

/// (2^t - 1)(m + 1) + 1
std::uint64_t additive_state_count(int items, Money endowment, int stage);

}  // namespace seqauction
