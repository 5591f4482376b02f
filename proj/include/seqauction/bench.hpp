#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "seqauction/additive.hpp"
#include "seqauction/core.hpp"

namespace seqauction {

/// n items (n even); the odd-position items and the even-position items
/// each form a bundle worth 100 n/2, opponents uniform on 0..100.
ProblemInstance gen_substitutes(int items);

/// Nine items; {r1,r4,r7}, {r2,r5,r8}, {r3,r6,r9} each worth 300,
/// opponents uniform on 0..100.
ProblemInstance gen_three_bundles();

enum class Method { Additive, QuasiLinear, Prorated, Trivial };

std::string_view to_string(Method method);
Method parse_method(std::string_view name);

enum class Family { Substitutes, ThreeBundles };

struct BenchConfig {
  Family family = Family::Substitutes;
  std::vector<Method> methods;
  std::vector<int> items;          // substitutes only
  std::vector<Money> endowments;   // additive / quasilinear sweep
  std::vector<Money> budgets;      // additive (m = budget), prorated, trivial
  int repetitions = 1;
  std::uint64_t seed = 0;
  AdditiveBidCap additive_cap = AdditiveBidCap::Support;
  std::uint64_t mc_samples = 100'000;
};

/// Throws ConfigError on unknown names or inconsistent sweeps.
BenchConfig bench_config_from_json(const nlohmann::json& doc);

/// Runtime comparison of the two unconstrained solvers.
BenchConfig runtime_sweep_config();
/// Budget sweep 10..260 on the three-bundle family.
BenchConfig budget_sweep_config();

struct BenchRow {
  Method method = Method::QuasiLinear;
  int n = 0;
  Money m = 0;
  std::optional<Money> budget;
  double runtime_ms = 0.0;
  double expected_utility = 0.0;
  Money max_payment = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::string_view kCsvHeader =
    "method,n,m,budget,runtime_ms,expected_utility,max_payment,seed";

/// Rows come back in canonical order (method, n, m, budget, repetition).
/// Expected utilities are quasi-linear (relative to not bidding).
std::vector<BenchRow> run_bench(const BenchConfig& config);

void write_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace seqauction
