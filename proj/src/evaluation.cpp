#include "seqauction/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace seqauction {

namespace {

// Neumaier's compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double realized_utility(const UtilityMode& mode, double valuation, Money paid) {
  if (const auto* additive = std::get_if<AdditiveUtility>(&mode)) {
    return valuation + additive->money_utility(additive->endowment - paid);
  }
  return valuation - static_cast<double>(paid);
}

Money checked_bid(const ExecutionPolicy& policy, int stage, ItemMask subset, Money paid) {
  const Money bid = policy.bid(stage, subset, paid);
  if (bid < 0) {
    throw DomainError("policy '" + policy.name() + "' produced a negative bid at stage " +
                      std::to_string(stage));
  }
  return bid;
}

class PathEnumerator {
 public:
  PathEnumerator(const ProblemInstance& instance, const ExecutionPolicy& policy,
                 const UtilityMode& mode, EvalOptions options)
      : instance_(instance), policy_(policy), mode_(mode),
        terminal_(instance.valuation.tabulate()) {
    if (options.bundle_diagnostics) report_.bundle_probability.assign(subset_count(instance.items), 0.0);
  }

  EvalReport run() {
    visit(0, 0, 0, 1.0, true);
    report_.expected_utility = utility_.value();
    report_.probability_mass = mass_.value();
    return std::move(report_);
  }

 private:
  void visit(int stage, ItemMask subset, Money paid, double probability, bool positive) {
    if (stage == instance_.items) {
      ++report_.path_count;
      mass_.add(probability);
      if (!positive) return;
      report_.max_payment = std::max(report_.max_payment, paid);
      utility_.add(probability * realized_utility(mode_, terminal_[subset], paid));
      if (!report_.bundle_probability.empty()) report_.bundle_probability[subset] += probability;
      return;
    }
    const Money bid = checked_bid(policy_, stage, subset, paid);
    const double win = win_probability(instance_.models[stage], bid);
    visit(stage + 1, subset | item_bit(stage), paid + bid, probability * win, positive && win > 0.0);
    visit(stage + 1, subset, paid, probability * (1.0 - win), positive && win < 1.0);
  }

  const ProblemInstance& instance_;
  const ExecutionPolicy& policy_;
  const UtilityMode& mode_;
  std::vector<double> terminal_;
  EvalReport report_;
  CompensatedSum utility_;
  CompensatedSum mass_;
};

Money max_placed(const ProblemInstance& instance, const ExecutionPolicy& policy, int stage,
                 ItemMask subset, Money paid) {
  if (stage == instance.items) return paid;
  const Money bid = checked_bid(policy, stage, subset, paid);
  return std::max(max_placed(instance, policy, stage + 1, subset | item_bit(stage), paid + bid),
                  max_placed(instance, policy, stage + 1, subset, paid));
}

}  // namespace

EvalReport exact_eval(const ProblemInstance& instance, const ExecutionPolicy& policy,
                      const UtilityMode& mode, EvalOptions options) {
  require_valid(instance);
  if (instance.items > kMaxExactItems) {
    throw CapacityError("exact evaluation enumerates 2^n paths; n = " +
                        std::to_string(instance.items) + " exceeds " +
                        std::to_string(kMaxExactItems) + ", use monte_carlo");
  }
  return PathEnumerator(instance, policy, mode, options).run();
}

Money max_placed_payment(const ProblemInstance& instance, const ExecutionPolicy& policy) {
  require_valid(instance);
  return max_placed(instance, policy, 0, 0, 0);
}

MCReport monte_carlo(const ProblemInstance& instance, const ExecutionPolicy& policy,
                     std::uint64_t samples, std::uint64_t seed, const UtilityMode& mode) {
  require_valid(instance);
  if (samples < 1) throw DomainError("monte_carlo needs at least one sample");

  // cumulative[i][k] = P(opposing bid <= pmf[k].value), last entry forced to 1
  std::vector<std::vector<double>> cumulative;
  for (const auto& model : instance.models) {
    std::vector<double> c;
    double mass = 0.0;
    for (const auto& point : model.pmf()) c.push_back(mass += point.probability);
    c.back() = 1.0;
    cumulative.push_back(std::move(c));
  }
  const auto terminal = instance.valuation.tabulate();

  std::mt19937_64 engine(seed);
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t s = 1; s <= samples; ++s) {
    ItemMask subset = 0;
    Money paid = 0;
    for (int t = 0; t < instance.items; ++t) {
      const Money bid = checked_bid(policy, t, subset, paid);
      const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      const auto& c = cumulative[t];
      const auto k = static_cast<std::size_t>(std::upper_bound(c.begin(), c.end(), u) - c.begin());
      const Money opposing = instance.models[t].pmf()[std::min(k, c.size() - 1)].value;
      if (bid >= opposing) {
        subset |= item_bit(t);
        paid += bid;
      }
    }
    const double x = realized_utility(mode, terminal[subset], paid);
    const double delta = x - mean;
    mean += delta / static_cast<double>(s);
    m2 += delta * (x - mean);
  }

  MCReport report;
  report.mean = mean;
  report.samples = samples;
  report.seed = seed;
  if (samples > 1) {
    const double variance = m2 / static_cast<double>(samples - 1);
    report.std_error = std::sqrt(variance / static_cast<double>(samples));
  }
  return report;
}

BruteForceResult brute_force_optimal(const ProblemInstance& instance, Money bid_grid_cap) {
  require_valid(instance);
  if (bid_grid_cap < 0) throw DomainError("bid grid cap must be >= 0");
  const int n = instance.items;
  if (n > 3) throw CapacityError("brute force is limited to n <= 3");

  const std::size_t states = subset_count(n) - 1;
  const auto choices = static_cast<std::uint64_t>(bid_grid_cap) + 1;
  std::uint64_t assignments = 1;
  for (std::size_t i = 0; i < states; ++i) {
    if (assignments > kMaxBruteForceAssignments / choices) {
      throw CapacityError("brute force search space exceeds 1e7 assignments");
    }
    assignments *= choices;
  }

  // flat[offset(t) + subset] with offset(t) = 2^t - 1
  std::vector<Money> flat(states, 0);
  const ExecutionPolicy policy("brute-force", [&flat](int stage, ItemMask subset, Money) {
    return flat[(std::size_t{1} << stage) - 1 + subset];
  });

  BruteForceResult best;
  best.value = -std::numeric_limits<double>::infinity();
  std::vector<Money> best_flat;
  for (std::uint64_t a = 0; a < assignments; ++a) {
    if (a > 0) {
      for (auto& z : flat) {  // odometer increment
        if (++z <= bid_grid_cap) break;
        z = 0;
      }
    }
    const double value = exact_eval(instance, policy).expected_utility;
    if (value > best.value) {
      best.value = value;
      best_flat = flat;
    }
  }

  best.bids.resize(n);
  for (int t = 0; t < n; ++t) {
    const std::size_t offset = (std::size_t{1} << t) - 1;
    best.bids[t].assign(best_flat.begin() + offset, best_flat.begin() + offset + subset_count(t));
  }
  return best;
}

}  // namespace seqauction
