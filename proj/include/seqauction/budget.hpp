#pragma once

#include <vector>

#include "seqauction/core.hpp"
#include "seqauction/policy.hpp"
#include "seqauction/quasilinear.hpp"

namespace seqauction {

/// Budget-feasible strategy derived from an unconstrained QStrategy by
/// prorating the budget over each path and re-optimizing under the caps.
struct ProratedStrategy {
  int items = 0;
  Money budget = 0;
  std::vector<std::vector<double>> values;  // V'[t], t = 0..n; V'[n] = v
  std::vector<std::vector<Money>> bids;     // t < n
  std::vector<std::vector<Money>> caps;     // z_max, t < n
  /// Largest sum of bids over every win/lose branch starting at a state,
  /// counting the state's own bid. Row n is all zeros.
  std::vector<std::vector<Money>> future_payment;
  /// Stages >= adjusted_from are final.
  int adjusted_from = 0;
  /// Bids lowered by the forward feasibility pass.
  int clamp_count = 0;
  Money certified_max_payment = 0;
  bool feasible = false;

  Money bid(QState s) const { return bids[s.stage][s.subset]; }
  double value(QState s) const { return values[s.stage][s.subset]; }
  double root_value() const { return values[0][0]; }
};

/// Sum of the unconstrained bids paid on the unique path from the root to
/// `state`, excluding the state's own bid.
Money prepayment(const QStrategy& pi, QState state);

/// Largest total of adjusted bids along any branch starting at `state`.
/// Throws SequencingError if the state's stage has not been adjusted yet.
Money max_future_payment(const ProratedStrategy& adjusted, QState state);

/// Runs the second backward pass one stage at a time, so partially adjusted
/// tables can be inspected.
class ProratedSolver {
 public:
  ProratedSolver(const ProblemInstance& instance, const QStrategy& pi, Money budget);

  bool done() const { return next_stage_ < 0; }
  /// Adjusts every state of the next stage (n-1 first).
  void adjust_next_stage();
  const ProratedStrategy& partial() const { return out_; }
  /// Completes the backward pass if needed, then clamps and certifies.
  ProratedStrategy finish();

 private:
  void clamp_forward();
  void recompute_values_and_payments();

  const ProblemInstance& instance_;
  const QStrategy& pi_;
  ProratedStrategy out_;
  int next_stage_;
};

ProratedStrategy solve_prorated(const ProblemInstance& instance, const QStrategy& pi,
                                Money budget);

/// Bids min(pi bid, money left) and stops once the budget is spent.
ExecutionPolicy trivial_policy(const QStrategy& pi, Money budget);

}  // namespace seqauction
