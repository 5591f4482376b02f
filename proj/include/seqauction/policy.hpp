#pragma once

#include <functional>
#include <string>

#include "seqauction/additive.hpp"
#include "seqauction/core.hpp"
#include "seqauction/quasilinear.hpp"

namespace seqauction {

struct ProratedStrategy;

/// Deterministic bidding rule: (stage, items held, paid so far) -> bid.
class ExecutionPolicy {
 public:
  using Rule = std::function<Money(int stage, ItemMask subset, Money paid)>;

  ExecutionPolicy(std::string name, Rule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

  Money bid(int stage, ItemMask subset, Money paid) const { return rule_(stage, subset, paid); }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  Rule rule_;
};

/// Follows the table and ignores payments.
ExecutionPolicy make_policy(const QStrategy& strategy);
/// Looks up d = endowment - paid.
ExecutionPolicy make_policy(const AStrategy& strategy);
ExecutionPolicy make_policy(const ProratedStrategy& strategy);
/// Never bids.
ExecutionPolicy zero_policy();

}  // namespace seqauction
