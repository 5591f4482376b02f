#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "seqauction/core.hpp"
#include "seqauction/policy.hpp"

namespace seqauction {

/// Realized utility v(S) - total paid.
struct QuasiLinearUtility {};

/// Realized utility v(S) + f(endowment - total paid).
struct AdditiveUtility {
  Money endowment = 0;
  MoneyUtility money_utility;
};

using UtilityMode = std::variant<QuasiLinearUtility, AdditiveUtility>;

inline constexpr int kMaxExactItems = 20;

struct EvalOptions {
  bool bundle_diagnostics = false;
};

struct EvalReport {
  double expected_utility = 0.0;
  /// Largest total payment over outcome paths with positive probability.
  Money max_payment = 0;
  std::uint64_t path_count = 0;
  /// Sum of all path probabilities; 1 up to rounding.
  double probability_mass = 0.0;
  /// Probability of ending with each subset (only with bundle_diagnostics).
  std::vector<double> bundle_probability;
};

/// Enumerates all 2^n win/lose outcome vectors.
EvalReport exact_eval(const ProblemInstance& instance, const ExecutionPolicy& policy,
                      const UtilityMode& mode = QuasiLinearUtility{}, EvalOptions options = {});

/// Largest total of placed bids over every win/lose branch, whether or not
/// the branch has positive probability. Upper-bounds EvalReport::max_payment.
Money max_placed_payment(const ProblemInstance& instance, const ExecutionPolicy& policy);

struct MCReport {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Simulates the auctions with std::mt19937_64(seed). Each opposing bid is
/// drawn by inverting the pmf's cumulative sum at u = (next() >> 11) * 2^-53.
MCReport monte_carlo(const ProblemInstance& instance, const ExecutionPolicy& policy,
                     std::uint64_t samples, std::uint64_t seed,
                     const UtilityMode& mode = QuasiLinearUtility{});

struct BruteForceResult {
  double value = 0.0;
  std::vector<std::vector<Money>> bids;  // [t][subset], t < n
};

inline constexpr std::uint64_t kMaxBruteForceAssignments = 10'000'000;

/// Exhaustive search over every assignment of bids 0..bid_grid_cap to the
/// quasi-linear states; n <= 3.
BruteForceResult brute_force_optimal(const ProblemInstance& instance, Money bid_grid_cap);

}  // namespace seqauction
