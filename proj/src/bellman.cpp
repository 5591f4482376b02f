#include "seqauction/detail/bellman.hpp"

#include <algorithm>
#include <cmath>

namespace seqauction::detail {

BestBid smallest_argmax(std::span<const double> q) {
  const double best = *std::max_element(q.begin(), q.end());
  const double floor_value = best - kTieTolerance * std::max(1.0, std::abs(best));
  for (std::size_t z = 0; z < q.size(); ++z) {
    if (q[z] >= floor_value) return {static_cast<Money>(z), q[z]};
  }
  return {0, q[0]};  // unreachable
}

}  // namespace seqauction::detail
