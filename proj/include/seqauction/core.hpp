#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "seqauction/errors.hpp"

namespace seqauction {

/// Amounts of money (bids, payments, endowments) in integer minor units.
using Money = std::int64_t;

/// Set of items as a bitmask; bit i is the item auctioned at stage i.
using ItemMask = std::uint32_t;

inline constexpr int kMaxItems = 24;

constexpr ItemMask item_bit(int item) { return ItemMask{1} << item; }
constexpr ItemMask full_mask(int items) { return item_bit(items) - 1; }
constexpr std::size_t subset_count(int items) { return std::size_t{1} << items; }

struct PmfPoint {
  Money value = 0;
  double probability = 0.0;
};

/// Distribution of the highest opposing bid for one item.
///
/// The agent wins ties, so the probability of winning with bid z is the
/// mass at or below z.
class OpponentBidModel {
 public:
  OpponentBidModel() = default;
  explicit OpponentBidModel(std::vector<PmfPoint> pmf) : pmf_(std::move(pmf)) {}

  /// Uniform over the integers lo..hi.
  static OpponentBidModel uniform(Money lo, Money hi);
  /// All mass on a single value.
  static OpponentBidModel point(Money value);

  const std::vector<PmfPoint>& pmf() const { return pmf_; }

  /// Win probability for every bid 0..max support, identical to
  /// win_probability() at each index.
  std::vector<double> cdf_table() const;

 private:
  std::vector<PmfPoint> pmf_;
};

double win_probability(const OpponentBidModel& model, Money bid);

/// Largest support point; bidding more never raises the win probability.
Money max_meaningful_bid(const OpponentBidModel& model);

struct Bundle {
  ItemMask items = 0;
  double value = 0.0;
};

/// Value of every subset, stored densely (index = mask).
struct ExplicitTable {
  std::vector<double> values;
};

/// v(S) = max(0, max{value_B : B subset of S}).
struct BundleMax {
  std::vector<Bundle> bundles;
};

struct Valuation {
  int items = 0;
  std::variant<ExplicitTable, BundleMax> form;

  static Valuation table(int items, std::vector<double> values);
  static Valuation bundles(int items, std::vector<Bundle> bundles);

  /// Values for all 2^items subsets.
  std::vector<double> tabulate() const;
};

double evaluate_valuation(const Valuation& valuation, ItemMask subset);

/// Utility of money left over, f(d). Identity unless a table is given.
class MoneyUtility {
 public:
  MoneyUtility() = default;

  static MoneyUtility identity() { return MoneyUtility{}; }
  /// f(d) = values[d] for d in 0..values.size()-1.
  static MoneyUtility tabulated(std::vector<double> values);

  bool is_identity() const { return table_.empty(); }
  const std::vector<double>& table() const { return table_; }

  double operator()(Money amount) const;

  /// Non-decreasing over the table (the identity always is).
  bool is_monotone() const;

 private:
  std::vector<double> table_;
};

struct ProblemInstance {
  int items = 0;
  std::vector<OpponentBidModel> models;  // auction order
  Valuation valuation;
  std::optional<Money> endowment;
  std::optional<Money> budget;
  MoneyUtility money_utility;
};

/// Empty iff the instance satisfies every structural invariant.
std::vector<Violation> validate_instance(const ProblemInstance& instance);

/// Throws ValidationError carrying all violations.
void require_valid(const ProblemInstance& instance);

}  // namespace seqauction
