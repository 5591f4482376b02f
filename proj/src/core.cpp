#include "seqauction/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace seqauction {

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::ostringstream out;
  out << "invalid instance:";
  for (const auto& v : violations) {
    out << "\n  " << v.field << " [" << v.rule << "]: " << v.message;
  }
  return out.str();
}

constexpr double kProbabilitySumTolerance = 1e-9;

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

ValidationError::ValidationError(const std::string& message)
    : Error(message), violations_{{"input", "schema", message}} {}

OpponentBidModel OpponentBidModel::uniform(Money lo, Money hi) {
  if (lo < 0 || hi < lo) {
    throw DomainError("uniform model needs 0 <= lo <= hi");
  }
  const double p = 1.0 / static_cast<double>(hi - lo + 1);
  std::vector<PmfPoint> pmf;
  pmf.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (Money v = lo; v <= hi; ++v) pmf.push_back({v, p});
  return OpponentBidModel(std::move(pmf));
}

OpponentBidModel OpponentBidModel::point(Money value) {
  return OpponentBidModel({{value, 1.0}});
}

std::vector<double> OpponentBidModel::cdf_table() const {
  const Money top = max_meaningful_bid(*this);
  std::vector<double> cdf(static_cast<std::size_t>(top) + 1, 0.0);
  double mass = 0.0;
  std::size_t next = 0;
  for (Money z = 0; z <= top; ++z) {
    while (next < pmf_.size() && pmf_[next].value <= z) {
      mass += pmf_[next].probability;
      ++next;
    }
    cdf[static_cast<std::size_t>(z)] = mass;
  }
  cdf.back() = 1.0;
  return cdf;
}

double win_probability(const OpponentBidModel& model, Money bid) {
  const auto& pmf = model.pmf();
  if (pmf.empty()) return 0.0;
  if (bid >= max_meaningful_bid(model)) return 1.0;
  double mass = 0.0;
  for (const auto& point : pmf) {
    if (point.value > bid) break;
    mass += point.probability;
  }
  return mass;
}

Money max_meaningful_bid(const OpponentBidModel& model) {
  Money top = 0;
  for (const auto& point : model.pmf()) top = std::max(top, point.value);
  return top;
}

Valuation Valuation::table(int items, std::vector<double> values) {
  return Valuation{items, ExplicitTable{std::move(values)}};
}

Valuation Valuation::bundles(int items, std::vector<Bundle> bundles) {
  return Valuation{items, BundleMax{std::move(bundles)}};
}

std::vector<double> Valuation::tabulate() const {
  if (const auto* table = std::get_if<ExplicitTable>(&form)) {
    return table->values;
  }
  const auto& bundles = std::get<BundleMax>(form).bundles;
  std::vector<double> values(subset_count(items), 0.0);
  for (const auto& b : bundles) {
    if (b.items <= full_mask(items)) {
      values[b.items] = std::max(values[b.items], b.value);
    }
  }
  // superset propagation: each subset inherits the best bundle it contains
  for (int i = 0; i < items; ++i) {
    const ItemMask bit = item_bit(i);
    for (ItemMask mask = 0; mask <= full_mask(items); ++mask) {
      if (mask & bit) values[mask] = std::max(values[mask], values[mask ^ bit]);
    }
  }
  return values;
}

double evaluate_valuation(const Valuation& valuation, ItemMask subset) {
  if (valuation.items < 0 || valuation.items > kMaxItems ||
      (subset & ~full_mask(valuation.items)) != 0) {
    throw DomainError("subset " + std::to_string(subset) + " is outside items 0.." +
                      std::to_string(valuation.items - 1));
  }
  if (const auto* table = std::get_if<ExplicitTable>(&valuation.form)) {
    if (subset >= table->values.size()) {
      throw DomainError("valuation table does not cover subset " + std::to_string(subset));
    }
    return table->values[subset];
  }
  double best = 0.0;
  for (const auto& b : std::get<BundleMax>(valuation.form).bundles) {
    if ((b.items & subset) == b.items) best = std::max(best, b.value);
  }
  return best;
}

MoneyUtility MoneyUtility::tabulated(std::vector<double> values) {
  if (values.empty()) throw DomainError("tabulated money utility needs at least one point");
  MoneyUtility f;
  f.table_ = std::move(values);
  return f;
}

double MoneyUtility::operator()(Money amount) const {
  if (table_.empty()) return static_cast<double>(amount);
  if (amount < 0 || static_cast<std::size_t>(amount) >= table_.size()) {
    throw DomainError("money utility is tabulated on 0.." + std::to_string(table_.size() - 1) +
                      ", queried at " + std::to_string(amount));
  }
  return table_[static_cast<std::size_t>(amount)];
}

bool MoneyUtility::is_monotone() const {
  return std::is_sorted(table_.begin(), table_.end());
}

std::vector<Violation> validate_instance(const ProblemInstance& instance) {
  std::vector<Violation> out;
  auto add = [&](std::string field, std::string rule, std::string message) {
    out.push_back({std::move(field), std::move(rule), std::move(message)});
  };

  const int n = instance.items;
  if (n < 1 || n > kMaxItems) {
    add("items", "range", "item count must be in 1.." + std::to_string(kMaxItems));
    return out;  // everything else is sized by n
  }
  if (instance.models.size() != static_cast<std::size_t>(n)) {
    add("distributions", "length", "expected " + std::to_string(n) + " models, got " +
                                       std::to_string(instance.models.size()));
  }

  for (std::size_t i = 0; i < instance.models.size(); ++i) {
    const std::string field = "distributions[" + std::to_string(i) + "]";
    const auto& pmf = instance.models[i].pmf();
    if (pmf.empty()) {
      add(field, "non-empty", "pmf has no support points");
      continue;
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < pmf.size(); ++k) {
      const auto& p = pmf[k];
      if (!(p.probability > 0.0 && p.probability <= 1.0)) {
        add(field, "probability-range", "probability must lie in (0,1]");
      }
      if (p.value < 0) add(field, "value-nonnegative", "support values must be >= 0");
      if (k > 0 && p.value <= pmf[k - 1].value) {
        add(field, "value-order", "support values must be strictly increasing");
      }
      sum += p.probability;
    }
    if (!(std::abs(sum - 1.0) <= kProbabilitySumTolerance)) {
      add(field, "probability-sum", "probabilities sum to " + std::to_string(sum));
    }
  }

  const auto& valuation = instance.valuation;
  if (valuation.items != n) {
    add("valuation", "domain", "valuation covers " + std::to_string(valuation.items) +
                                   " items, instance has " + std::to_string(n));
  } else if (const auto* table = std::get_if<ExplicitTable>(&valuation.form)) {
    if (table->values.size() != subset_count(n)) {
      add("valuation", "table-coverage", "table must list all " +
                                             std::to_string(subset_count(n)) + " subsets");
    } else {
      if (table->values[0] != 0.0) add("valuation", "empty-set", "v(empty set) must be 0");
      for (double v : table->values) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
          add("valuation", "value-nonnegative", "subset values must be finite and >= 0");
          break;
        }
      }
    }
  } else {
    for (const auto& b : std::get<BundleMax>(valuation.form).bundles) {
      if ((b.items & ~full_mask(n)) != 0) {
        add("valuation", "bundle-domain", "bundle references an item outside 0.." +
                                              std::to_string(n - 1));
      }
      if (!(b.value >= 0.0) || !std::isfinite(b.value)) {
        add("valuation", "value-nonnegative", "bundle values must be finite and >= 0");
      }
      if (b.items == 0 && b.value != 0.0) {
        add("valuation", "empty-set", "v(empty set) must be 0");
      }
    }
  }

  if (instance.endowment && *instance.endowment < 0) {
    add("endowment", "nonnegative", "endowment must be >= 0");
  }
  if (instance.budget && *instance.budget < 0) {
    add("budget", "nonnegative", "budget must be >= 0");
  }
  if (!instance.money_utility.is_monotone()) {
    add("money_utility", "monotone", "money utility must be non-decreasing");
  }
  return out;
}

void require_valid(const ProblemInstance& instance) {
  auto violations = validate_instance(instance);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

}  // namespace seqauction
