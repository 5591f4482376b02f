#pragma once

#include <span>
#include <vector>

#include "seqauction/core.hpp"

namespace seqauction {

/// Stage t (auction of item t about to start) holding `subset`; only items
/// with index < t can be held.
struct QState {
  int stage = 0;
  ItemMask subset = 0;
};

/// Optimal unconstrained strategy under quasi-linear utility.
///
/// values[t] has 2^t entries for t = 0..n, with values[n] = v(.);
/// bids[t] has 2^t entries for t = 0..n-1.
struct QStrategy {
  int items = 0;
  std::vector<std::vector<double>> values;
  std::vector<std::vector<Money>> bids;

  double value(QState s) const { return values[s.stage][s.subset]; }
  Money bid(QState s) const { return bids[s.stage][s.subset]; }
  double root_value() const { return values[0][0]; }

  /// Total number of states over all stages, 2^(n+1) - 1.
  std::size_t state_count() const;
};

/// Q(<S>^t, z) = W(z)(V(S + item t) - z) + (1 - W(z)) V(S), with the stage t+1
/// value row passed in `next_values`.
double q_value(const ProblemInstance& instance, std::span<const double> next_values,
               QState state, Money bid);

/// floor(win_value - lose_value), clamped at 0.
Money bid_upper_bound(double win_value, double lose_value);
Money bid_upper_bound(const QStrategy& strategy, QState state);

QStrategy solve_quasilinear(const ProblemInstance& instance);

}  // namespace seqauction
