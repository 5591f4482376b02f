// seqauction: solve, evaluate, generate and benchmark sequential-auction
// bidding strategies.
//
// Exit codes: 0 success, 2 validation or configuration error, 1 anything else.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "seqauction/additive.hpp"
#include "seqauction/bench.hpp"
#include "seqauction/budget.hpp"
#include "seqauction/evaluation.hpp"
#include "seqauction/io.hpp"
#include "seqauction/quasilinear.hpp"

namespace sa = seqauction;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;

struct SolveArgs {
  std::string mode;
  std::string instance;
  std::optional<sa::Money> endowment;
  std::optional<sa::Money> budget;
  bool root_only = false;
  std::string additive_cap = "support";
  std::string out;
};

struct EvalArgs {
  std::string instance;
  std::string strategy;
  bool exact = false;
  bool mc = false;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0;
  std::string json_out;
};

struct GenArgs {
  int n = 0;
  std::string out;
};

struct BenchArgs {
  std::string config;
  std::string csv;
};

sa::Money require_amount(const std::optional<sa::Money>& flag, const std::optional<sa::Money>& file,
                         const char* what) {
  if (flag) return *flag;
  if (file) return *file;
  throw sa::ValidationError(std::string("mode needs ") + what + " (flag or instance field)");
}

int run_solve(const SolveArgs& args) {
  auto instance = sa::load_instance(args.instance);
  if (args.endowment) instance.endowment = args.endowment;
  if (args.budget) instance.budget = args.budget;
  sa::require_valid(instance);

  const auto start = std::chrono::steady_clock::now();
  sa::json doc;
  double root_value = 0.0;
  sa::Money root_bid = 0;
  if (args.mode == "quasilinear") {
    const auto pi = sa::solve_quasilinear(instance);
    doc = sa::to_json(pi);
    root_value = pi.root_value();
    root_bid = pi.bid({0, 0});
  } else if (args.mode == "additive") {
    const auto m = require_amount(args.endowment, instance.endowment, "--endowment");
    const sa::AdditiveOptions options{args.additive_cap == "valuation" ? sa::AdditiveBidCap::Valuation
                                                                       : sa::AdditiveBidCap::Support};
    const auto a = sa::solve_additive(instance, m, instance.money_utility, options);
    doc = sa::to_json(a, args.root_only);
    root_value = a.root_value();
    root_bid = a.bid({0, 0, m});
  } else if (args.mode == "prorated") {
    const auto budget = require_amount(args.budget, instance.budget, "--budget");
    const auto pi = sa::solve_quasilinear(instance);
    const auto prorated = sa::solve_prorated(instance, pi, budget);
    doc = sa::to_json(prorated);
    root_value = prorated.root_value();
    root_bid = prorated.bid({0, 0});
  } else {  // trivial
    const auto budget = require_amount(args.budget, instance.budget, "--budget");
    const auto pi = sa::solve_quasilinear(instance);
    doc = sa::trivial_to_json(pi, budget);
    root_value = instance.items <= sa::kMaxExactItems
                     ? sa::exact_eval(instance, sa::trivial_policy(pi, budget)).expected_utility
                     : std::nan("");
    root_bid = std::min(pi.bid({0, 0}), budget);
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  sa::save_json(args.out, doc);
  std::printf("mode=%s items=%d root_value=%.12g root_bid=%lld runtime_ms=%.3f\n", args.mode.c_str(),
              instance.items, root_value, static_cast<long long>(root_bid), ms);
  return 0;
}

int run_eval(const EvalArgs& args) {
  if (args.exact == args.mc) throw sa::ConfigError("choose exactly one of --exact or --mc");
  const auto instance = sa::load_instance(args.instance);
  sa::require_valid(instance);
  const auto loaded = sa::strategy_from_json(sa::load_json(args.strategy), instance);

  sa::json doc;
  if (args.exact) {
    const auto report = sa::exact_eval(instance, loaded.policy, loaded.utility);
    doc = sa::to_json(report);
    std::printf("exact mode=%s expected_utility=%.12f max_payment=%lld paths=%llu\n",
                loaded.mode.c_str(), report.expected_utility,
                static_cast<long long>(report.max_payment),
                static_cast<unsigned long long>(report.path_count));
  } else {
    const auto report =
        sa::monte_carlo(instance, loaded.policy, args.samples, args.seed, loaded.utility);
    doc = sa::to_json(report);
    std::printf("mc mode=%s mean=%.12f std_error=%.12f samples=%llu seed=%llu\n",
                loaded.mode.c_str(), report.mean, report.std_error,
                static_cast<unsigned long long>(report.samples),
                static_cast<unsigned long long>(report.seed));
  }
  if (!args.json_out.empty()) sa::save_json(args.json_out, doc);
  return 0;
}

int run_bench(const BenchArgs& args) {
  const auto config = sa::bench_config_from_json(sa::load_json(args.config));
  const auto rows = sa::run_bench(config);
  std::ofstream out(args.csv);
  if (!out) throw sa::Error("cannot write " + args.csv);
  sa::write_csv(out, rows);
  std::printf("rows=%zu csv=%s\n", rows.size(), args.csv.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal and budget-feasible bidding strategies for sequential first-price auctions"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute a bidding strategy");
  solve_cmd->add_option("--mode", solve.mode, "Solver")
      ->required()
      ->check(CLI::IsMember({"quasilinear", "additive", "prorated", "trivial"}));
  solve_cmd->add_option("--instance", solve.instance, "Instance JSON")->required();
  solve_cmd->add_option("--endowment", solve.endowment, "Initial money m (additive)");
  solve_cmd->add_option("--budget", solve.budget, "Budget (prorated, trivial)");
  solve_cmd->add_flag("--root-only", solve.root_only, "Additive: write only the initial state");
  solve_cmd->add_option("--additive-cap", solve.additive_cap, "Additive bid cap")
      ->check(CLI::IsMember({"support", "valuation"}));
  solve_cmd->add_option("--out", solve.out, "Strategy JSON")->required();

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a strategy");
  eval_cmd->add_option("--instance", eval.instance, "Instance JSON")->required();
  eval_cmd->add_option("--strategy", eval.strategy, "Strategy JSON")->required();
  eval_cmd->add_flag("--exact", eval.exact, "Enumerate all outcome paths");
  eval_cmd->add_flag("--mc", eval.mc, "Monte Carlo simulation");
  eval_cmd->add_option("--samples", eval.samples, "Monte Carlo samples");
  eval_cmd->add_option("--seed", eval.seed, "Monte Carlo seed");
  eval_cmd->add_option("--json", eval.json_out, "Also write the report as JSON");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate benchmark instances");
  gen_cmd->require_subcommand(1);
  auto* subst_cmd = gen_cmd->add_subcommand("substitutes", "Two substitutable bundles");
  subst_cmd->add_option("--n", gen.n, "Even item count")->required();
  subst_cmd->add_option("--out", gen.out, "Instance JSON")->required();
  auto* three_cmd = gen_cmd->add_subcommand("three-bundles", "Nine items, three bundles");
  three_cmd->add_option("--out", gen.out, "Instance JSON")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark sweep");
  bench_cmd->add_option("--config", bench.config, "Bench config JSON")->required();
  bench_cmd->add_option("--csv", bench.csv, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*eval_cmd) return run_eval(eval);
    if (*subst_cmd) {
      sa::save_json(gen.out, sa::to_json(sa::gen_substitutes(gen.n)));
      return 0;
    }
    if (*three_cmd) {
      sa::save_json(gen.out, sa::to_json(sa::gen_three_bundles()));
      return 0;
    }
    if (*bench_cmd) return run_bench(bench);
  } catch (const sa::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const sa::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const sa::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const sa::MismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
