#include "seqauction/budget.hpp"

#include <algorithm>
#include <memory>

#include "seqauction/detail/bellman.hpp"

namespace seqauction {

namespace {

Money floor_div(Money num, Money den) {
  Money q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

void check_pi_matches(const ProblemInstance& instance, const QStrategy& pi) {
  const int n = instance.items;
  if (pi.items != n || pi.values.size() != static_cast<std::size_t>(n + 1) ||
      pi.bids.size() != static_cast<std::size_t>(n)) {
    throw MismatchError("strategy has " + std::to_string(pi.items) + " items, instance has " +
                        std::to_string(n));
  }
  for (int t = 0; t < n; ++t) {
    if (pi.bids[t].size() != subset_count(t) || pi.values[t].size() != subset_count(t)) {
      throw MismatchError("strategy table at stage " + std::to_string(t) + " is malformed");
    }
  }
  if (pi.values[n] != instance.valuation.tabulate()) {
    throw MismatchError("strategy terminal values differ from the instance valuation");
  }
}

}  // namespace

Money prepayment(const QStrategy& pi, QState state) {
  if (state.stage < 0 || state.stage > pi.items || (state.subset & ~full_mask(state.stage)) != 0) {
    throw DomainError("invalid state for prepayment");
  }
  Money total = 0;
  for (int i = 0; i < state.stage; ++i) {
    if (state.subset & item_bit(i)) total += pi.bids[i][state.subset & full_mask(i)];
  }
  return total;
}

Money max_future_payment(const ProratedStrategy& adjusted, QState state) {
  if (state.stage < 0 || state.stage > adjusted.items ||
      (state.subset & ~full_mask(state.stage)) != 0) {
    throw DomainError("invalid state for max_future_payment");
  }
  if (state.stage < adjusted.adjusted_from) {
    throw SequencingError("stage " + std::to_string(state.stage) +
                          " has not been adjusted yet (adjusted from stage " +
                          std::to_string(adjusted.adjusted_from) + ")");
  }
  return adjusted.future_payment[state.stage][state.subset];
}

ProratedSolver::ProratedSolver(const ProblemInstance& instance, const QStrategy& pi, Money budget)
    : instance_(instance), pi_(pi), next_stage_(instance.items - 1) {
  require_valid(instance);
  check_pi_matches(instance, pi);
  if (budget < 0) throw DomainError("budget must be >= 0");

  const int n = instance.items;
  out_.items = n;
  out_.budget = budget;
  out_.adjusted_from = n;
  out_.values.resize(n + 1);
  out_.bids.resize(n);
  out_.caps.resize(n);
  out_.future_payment.resize(n + 1);
  out_.values[n] = pi.values[n];
  out_.future_payment[n].assign(subset_count(n), 0);
}

void ProratedSolver::adjust_next_stage() {
  if (done()) throw SequencingError("all stages are already adjusted");
  const int t = next_stage_;
  const auto cdf = instance_.models[t].cdf_table();
  const Money support_cap = static_cast<Money>(cdf.size()) - 1;
  const auto& next = out_.values[t + 1];
  const auto& next_payment = out_.future_payment[t + 1];

  auto& values = out_.values[t];
  auto& bids = out_.bids[t];
  auto& caps = out_.caps[t];
  auto& payment = out_.future_payment[t];
  values.resize(subset_count(t));
  bids.resize(subset_count(t));
  caps.resize(subset_count(t));
  payment.resize(subset_count(t));

  std::vector<double> q;
  for (ItemMask subset = 0; subset < subset_count(t); ++subset) {
    const ItemMask won = subset | item_bit(t);
    const Money z_opt = pi_.bids[t][subset];
    Money z_max = 0;
    if (z_opt > 0) {
      const Money z_pre = prepayment(pi_, {t, subset});
      const Money z_past = next_payment[won];
      z_max = std::max<Money>(0, floor_div(z_opt * (out_.budget - z_past), z_pre + z_opt));
    }

    const double win = next[won];
    const double lose = next[subset];
    const Money search = std::min(z_max, support_cap);
    q.resize(static_cast<std::size_t>(search) + 1);
    for (Money z = 0; z <= search; ++z) {
      const double p = cdf[static_cast<std::size_t>(z)];
      q[static_cast<std::size_t>(z)] = p * (win - static_cast<double>(z)) + (1.0 - p) * lose;
    }
    const auto best = detail::smallest_argmax(q);
    caps[subset] = z_max;
    bids[subset] = best.bid;
    values[subset] = best.value;
    payment[subset] = std::max(best.bid + next_payment[won], next_payment[subset]);
  }
  out_.adjusted_from = t;
  --next_stage_;
}

void ProratedSolver::clamp_forward() {
  const int n = instance_.items;
  std::vector<Money> paid{0};
  for (int t = 0; t < n; ++t) {
    std::vector<Money> next_paid(subset_count(t + 1), 0);
    for (ItemMask subset = 0; subset < subset_count(t); ++subset) {
      const Money allowed = out_.budget - paid[subset];
      Money& bid = out_.bids[t][subset];
      if (bid > allowed) {
        bid = std::max<Money>(0, allowed);
        ++out_.clamp_count;
      }
      next_paid[subset] = paid[subset];
      next_paid[subset | item_bit(t)] = paid[subset] + bid;
    }
    paid = std::move(next_paid);
  }
}

void ProratedSolver::recompute_values_and_payments() {
  for (int t = instance_.items - 1; t >= 0; --t) {
    const auto& model = instance_.models[t];
    const auto& next = out_.values[t + 1];
    const auto& next_payment = out_.future_payment[t + 1];
    for (ItemMask subset = 0; subset < subset_count(t); ++subset) {
      const ItemMask won = subset | item_bit(t);
      const Money bid = out_.bids[t][subset];
      const double p = win_probability(model, bid);
      out_.values[t][subset] = p * (next[won] - static_cast<double>(bid)) + (1.0 - p) * next[subset];
      out_.future_payment[t][subset] = std::max(bid + next_payment[won], next_payment[subset]);
    }
  }
}

ProratedStrategy ProratedSolver::finish() {
  while (!done()) adjust_next_stage();
  clamp_forward();
  if (out_.clamp_count > 0) recompute_values_and_payments();
  out_.certified_max_payment = out_.future_payment[0][0];
  out_.feasible = out_.certified_max_payment <= out_.budget;
  return out_;
}

ProratedStrategy solve_prorated(const ProblemInstance& instance, const QStrategy& pi,
                                Money budget) {
  return ProratedSolver(instance, pi, budget).finish();
}

ExecutionPolicy trivial_policy(const QStrategy& pi, Money budget) {
  if (budget < 0) throw DomainError("budget must be >= 0");
  auto table = std::make_shared<const std::vector<std::vector<Money>>>(pi.bids);
  return ExecutionPolicy("trivial", [table, budget](int stage, ItemMask subset, Money paid) {
    const Money left = budget - paid;
    return std::clamp<Money>((*table)[stage][subset], 0, std::max<Money>(left, 0));
  });
}

}  // namespace seqauction
