#include "seqauction/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <tuple>
#include <type_traits>

#include "seqauction/budget.hpp"
#include "seqauction/evaluation.hpp"
#include "seqauction/quasilinear.hpp"

namespace seqauction {

namespace {

constexpr Money kOpponentTop = 100;
constexpr int kExactEvalLimit = 12;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

ProblemInstance uniform_instance(int items, Valuation valuation) {
  ProblemInstance instance;
  instance.items = items;
  instance.models.assign(items, OpponentBidModel::uniform(0, kOpponentTop));
  instance.valuation = std::move(valuation);
  return instance;
}

struct Point {
  Method method;
  int n;
  Money m;
  std::optional<Money> budget;
};

std::vector<Point> expand(const BenchConfig& config) {
  std::vector<int> sizes = config.items;
  if (config.family == Family::ThreeBundles) sizes = {9};

  std::vector<Point> points;
  for (Method method : config.methods) {
    if ((method == Method::Prorated || method == Method::Trivial) && config.budgets.empty()) {
      throw ConfigError(std::string(to_string(method)) + " needs a non-empty budget sweep");
    }
    for (int n : sizes) {
      switch (method) {
        case Method::QuasiLinear:
          if (config.endowments.empty()) points.push_back({method, n, 0, std::nullopt});
          for (Money m : config.endowments) points.push_back({method, n, m, std::nullopt});
          break;
        case Method::Additive:
          for (Money m : config.endowments) points.push_back({method, n, m, std::nullopt});
          for (Money b : config.budgets) points.push_back({method, n, b, b});
          break;
        case Method::Prorated:
        case Method::Trivial:
          for (Money b : config.budgets) points.push_back({method, n, b, b});
          break;
      }
    }
  }
  return points;
}

BenchRow run_point(const BenchConfig& config, const Point& point) {
  const auto instance =
      config.family == Family::Substitutes ? gen_substitutes(point.n) : gen_three_bundles();

  BenchRow row{point.method, point.n, point.m, point.budget, 0.0, 0.0, 0, config.seed};
  const auto start = Clock::now();
  auto policy = zero_policy();
  switch (point.method) {
    case Method::QuasiLinear: {
      auto pi = solve_quasilinear(instance);
      row.runtime_ms = elapsed_ms(start);
      policy = make_policy(pi);
      break;
    }
    case Method::Additive: {
      auto a = solve_additive(instance, point.m, MoneyUtility::identity(), {config.additive_cap});
      row.runtime_ms = elapsed_ms(start);
      policy = make_policy(a);
      break;
    }
    case Method::Prorated: {
      auto pi = solve_quasilinear(instance);
      auto prorated = solve_prorated(instance, pi, *point.budget);
      row.runtime_ms = elapsed_ms(start);
      policy = make_policy(prorated);
      break;
    }
    case Method::Trivial: {
      auto pi = solve_quasilinear(instance);
      row.runtime_ms = elapsed_ms(start);
      policy = trivial_policy(pi, *point.budget);
      break;
    }
  }

  if (point.n <= kExactEvalLimit) {
    const auto report = exact_eval(instance, policy);
    row.expected_utility = report.expected_utility;
    row.max_payment = report.max_payment;
  } else {
    row.expected_utility = monte_carlo(instance, policy, config.mc_samples, config.seed).mean;
    row.max_payment = max_placed_payment(instance, policy);
  }
  return row;
}

template <typename T>
std::vector<T> read_list(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) return {};
  const auto& node = doc.at(key);
  try {
    if constexpr (std::is_arithmetic_v<T>) {
      if (node.is_object()) {  // {"from": a, "to": b, "step": s}
        const T from = node.at("from").get<T>();
        const T to = node.at("to").get<T>();
        const T step = node.value("step", T{1});
        if (step <= 0) throw ConfigError(std::string(key) + ".step must be positive");
        std::vector<T> out;
        for (T v = from; v <= to; v += step) out.push_back(v);
        return out;
      }
    }
    return node.get<std::vector<T>>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string(key) + ": " + e.what());
  }
}

}  // namespace

ProblemInstance gen_substitutes(int items) {
  if (items < 2 || items > kMaxItems || items % 2 != 0) {
    throw DomainError("substitutes family needs an even item count in 2.." +
                      std::to_string(kMaxItems));
  }
  ItemMask odd_positions = 0;   // r1, r3, ... (indices 0, 2, ...)
  ItemMask even_positions = 0;  // r2, r4, ...
  for (int i = 0; i < items; ++i) {
    (i % 2 == 0 ? odd_positions : even_positions) |= item_bit(i);
  }
  const double worth = 100.0 * items / 2;
  return uniform_instance(items, Valuation::bundles(items, {{odd_positions, worth},
                                                           {even_positions, worth}}));
}

ProblemInstance gen_three_bundles() {
  std::vector<Bundle> bundles;
  for (int first = 0; first < 3; ++first) {
    bundles.push_back({item_bit(first) | item_bit(first + 3) | item_bit(first + 6), 300.0});
  }
  return uniform_instance(9, Valuation::bundles(9, std::move(bundles)));
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Additive: return "additive";
    case Method::QuasiLinear: return "quasilinear";
    case Method::Prorated: return "prorated";
    case Method::Trivial: return "trivial";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::Additive, Method::QuasiLinear, Method::Prorated, Method::Trivial}) {
    if (name == to_string(m)) return m;
  }
  throw ConfigError("unknown method \"" + std::string(name) + "\"");
}

BenchConfig bench_config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("bench config must be a JSON object");
  BenchConfig config;

  const auto family = doc.value("family", std::string("substitutes"));
  if (family == "substitutes") {
    config.family = Family::Substitutes;
  } else if (family == "three_bundles" || family == "three-bundles") {
    config.family = Family::ThreeBundles;
  } else {
    throw ConfigError("unknown instance family \"" + family + "\"");
  }

  for (const auto& name : read_list<std::string>(doc, "methods")) {
    config.methods.push_back(parse_method(name));
  }
  config.items = read_list<int>(doc, "items");
  config.endowments = read_list<Money>(doc, "endowments");
  config.budgets = read_list<Money>(doc, "budgets");
  try {
    config.repetitions = doc.value("repetitions", 1);
    config.seed = doc.value("seed", std::uint64_t{0});
    config.mc_samples = doc.value("mc_samples", config.mc_samples);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(e.what());
  }

  const auto cap = doc.value("additive_bid_cap", std::string("support"));
  if (cap == "support") {
    config.additive_cap = AdditiveBidCap::Support;
  } else if (cap == "valuation") {
    config.additive_cap = AdditiveBidCap::Valuation;
  } else {
    throw ConfigError("additive_bid_cap must be \"support\" or \"valuation\"");
  }

  if (config.repetitions < 1) throw ConfigError("repetitions must be >= 1");
  if (config.mc_samples < 1) throw ConfigError("mc_samples must be >= 1");
  if (config.family == Family::Substitutes && !config.methods.empty()) {
    if (config.items.empty()) throw ConfigError("substitutes family needs \"items\"");
    for (int n : config.items) {
      if (n < 2 || n > kMaxItems || n % 2 != 0) {
        throw ConfigError("substitutes family needs even item counts in 2..24");
      }
    }
  }
  for (Money m : config.endowments) {
    if (m < 0) throw ConfigError("endowments must be >= 0");
  }
  for (Money b : config.budgets) {
    if (b < 0) throw ConfigError("budgets must be >= 0");
  }
  expand(config);  // surfaces missing sweeps early
  return config;
}

BenchConfig runtime_sweep_config() {
  BenchConfig config;
  config.family = Family::Substitutes;
  config.methods = {Method::Additive, Method::QuasiLinear};
  config.items = {2, 4, 6, 8, 10};
  config.endowments = {500, 1000, 1500};
  return config;
}

BenchConfig budget_sweep_config() {
  BenchConfig config;
  config.family = Family::ThreeBundles;
  config.methods = {Method::Additive, Method::Prorated, Method::Trivial};
  for (Money b = 10; b <= 260; b += 10) config.budgets.push_back(b);
  return config;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (const auto& point : expand(config)) {
    for (int rep = 0; rep < config.repetitions; ++rep) rows.push_back(run_point(config, point));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tuple(a.method, a.n, a.m, a.budget) < std::tuple(b.method, b.n, b.m, b.budget);
  });
  return rows;
}

void write_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << kCsvHeader << '\n';
  for (const auto& row : rows) {
    out << to_string(row.method) << ',' << row.n << ',' << row.m << ',';
    if (row.budget) out << *row.budget;
    out << ',' << std::fixed << std::setprecision(6) << row.runtime_ms << ','
        << std::defaultfloat << std::setprecision(17) << row.expected_utility << ','
        << row.max_payment << ',' << row.seed << '\n';
  }
}

}  // namespace seqauction
