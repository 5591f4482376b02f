#pragma once

#include <span>

#include "seqauction/core.hpp"

namespace seqauction::detail {

/// Relative tolerance under which two Q-values count as tied.
inline constexpr double kTieTolerance = 1e-13;

struct BestBid {
  Money bid = 0;
  double value = 0.0;
};

/// Smallest index whose Q is within tolerance of the maximum; q[z] is the
/// value of bidding z. Returns the Q-value actually attained at that bid.
BestBid smallest_argmax(std::span<const double> q);

}  // namespace seqauction::detail
