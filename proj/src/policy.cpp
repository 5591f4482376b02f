#include "seqauction/policy.hpp"

#include <memory>

#include "seqauction/budget.hpp"

namespace seqauction {

ExecutionPolicy make_policy(const QStrategy& strategy) {
  auto table = std::make_shared<const std::vector<std::vector<Money>>>(strategy.bids);
  return ExecutionPolicy("quasilinear", [table](int stage, ItemMask subset, Money) {
    return (*table)[stage][subset];
  });
}

ExecutionPolicy make_policy(const AStrategy& strategy) {
  auto shared = std::make_shared<const AStrategy>(strategy);
  return ExecutionPolicy("additive", [shared](int stage, ItemMask subset, Money paid) {
    const Money left = shared->endowment - paid;
    if (left < 0) throw DomainError("additive policy queried after overspending its endowment");
    return shared->bid({stage, subset, left});
  });
}

ExecutionPolicy make_policy(const ProratedStrategy& strategy) {
  auto table = std::make_shared<const std::vector<std::vector<Money>>>(strategy.bids);
  return ExecutionPolicy("prorated", [table](int stage, ItemMask subset, Money) {
    return (*table)[stage][subset];
  });
}

ExecutionPolicy zero_policy() {
  return ExecutionPolicy("zero", [](int, ItemMask, Money) { return Money{0}; });
}

}  // namespace seqauction
