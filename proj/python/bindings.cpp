#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "seqauction/additive.hpp"
#include "seqauction/bench.hpp"
#include "seqauction/budget.hpp"
#include "seqauction/evaluation.hpp"
#include "seqauction/io.hpp"
#include "seqauction/quasilinear.hpp"

namespace py = pybind11;
using namespace seqauction;

namespace {

UtilityMode utility_for(const ProblemInstance& instance, std::optional<Money> endowment) {
  if (endowment) return AdditiveUtility{*endowment, instance.money_utility};
  return QuasiLinearUtility{};
}

template <typename Strategy>
void def_policy_functions(py::module_& m) {
  m.def(
      "exact_eval",
      [](const ProblemInstance& instance, const Strategy& s, std::optional<Money> endowment) {
        return exact_eval(instance, make_policy(s), utility_for(instance, endowment));
      },
      py::arg("instance"), py::arg("strategy"), py::arg("endowment") = py::none(),
      "Exact expected utility by path enumeration. Passing an endowment switches to additive "
      "utility v(S) + f(endowment - paid).");
  m.def(
      "monte_carlo",
      [](const ProblemInstance& instance, const Strategy& s, std::uint64_t samples,
         std::uint64_t seed, std::optional<Money> endowment) {
        return monte_carlo(instance, make_policy(s), samples, seed,
                           utility_for(instance, endowment));
      },
      py::arg("instance"), py::arg("strategy"), py::arg("samples"), py::arg("seed"),
      py::arg("endowment") = py::none());
  m.def(
      "max_placed_payment",
      [](const ProblemInstance& instance, const Strategy& s) {
        return max_placed_payment(instance, make_policy(s));
      },
      py::arg("instance"), py::arg("strategy"));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bidding strategies for sequential first-price sealed-bid auctions";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<SequencingError>(m, "SequencingError", base.ptr());
  py::register_exception<MismatchError>(m, "MismatchError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  py::class_<ProblemInstance>(m, "Instance")
      .def_static(
          "from_json", [](const std::string& text) { return instance_from_json(json::parse(text)); },
          py::arg("text"))
      .def_static("load", [](const std::string& path) { return load_instance(path); })
      .def("to_json", [](const ProblemInstance& i) { return to_json(i).dump(); })
      .def_readonly("items", &ProblemInstance::items)
      .def_readwrite("endowment", &ProblemInstance::endowment)
      .def_readwrite("budget", &ProblemInstance::budget)
      .def("value", [](const ProblemInstance& i, ItemMask s) { return evaluate_valuation(i.valuation, s); })
      .def("win_probability",
           [](const ProblemInstance& i, int item, Money bid) {
             return win_probability(i.models.at(item), bid);
           })
      .def("violations", [](const ProblemInstance& i) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto& v : validate_instance(i)) out.emplace_back(v.field, v.rule, v.message);
        return out;
      });

  py::class_<QStrategy>(m, "QStrategy")
      .def_readonly("items", &QStrategy::items)
      .def_readonly("bids", &QStrategy::bids)
      .def_readonly("values", &QStrategy::values)
      .def("root_value", &QStrategy::root_value)
      .def("bid", [](const QStrategy& s, int t, ItemMask r) { return s.bid({t, r}); })
      .def("value", [](const QStrategy& s, int t, ItemMask r) { return s.value({t, r}); })
      .def("to_json", [](const QStrategy& s) { return to_json(s).dump(); });

  py::class_<AStrategy>(m, "AStrategy")
      .def_readonly("items", &AStrategy::items)
      .def_readonly("endowment", &AStrategy::endowment)
      .def("root_value", &AStrategy::root_value)
      .def("bid", [](const AStrategy& s, int t, ItemMask r, Money d) { return s.bid({t, r, d}); })
      .def("value", [](const AStrategy& s, int t, ItemMask r, Money d) { return s.value({t, r, d}); })
      .def("state_count", [](const AStrategy& s, int t) { return s.states(t).size(); })
      .def(
          "to_json",
          [](const AStrategy& s, bool root_only) { return to_json(s, root_only).dump(); },
          py::arg("root_only") = false);

  py::class_<ProratedStrategy>(m, "ProratedStrategy")
      .def_readonly("items", &ProratedStrategy::items)
      .def_readonly("budget", &ProratedStrategy::budget)
      .def_readonly("bids", &ProratedStrategy::bids)
      .def_readonly("caps", &ProratedStrategy::caps)
      .def_readonly("clamp_count", &ProratedStrategy::clamp_count)
      .def_readonly("certified_max_payment", &ProratedStrategy::certified_max_payment)
      .def_readonly("feasible", &ProratedStrategy::feasible)
      .def("root_value", &ProratedStrategy::root_value)
      .def("bid", [](const ProratedStrategy& s, int t, ItemMask r) { return s.bid({t, r}); })
      .def("value", [](const ProratedStrategy& s, int t, ItemMask r) { return s.value({t, r}); })
      .def("to_json", [](const ProratedStrategy& s) { return to_json(s).dump(); });

  py::class_<EvalReport>(m, "EvalReport")
      .def_readonly("expected_utility", &EvalReport::expected_utility)
      .def_readonly("max_payment", &EvalReport::max_payment)
      .def_readonly("path_count", &EvalReport::path_count)
      .def_readonly("probability_mass", &EvalReport::probability_mass);

  py::class_<MCReport>(m, "MCReport")
      .def_readonly("mean", &MCReport::mean)
      .def_readonly("std_error", &MCReport::std_error)
      .def_readonly("samples", &MCReport::samples)
      .def_readonly("seed", &MCReport::seed);

  m.def("gen_substitutes", &gen_substitutes, py::arg("items"));
  m.def("gen_three_bundles", &gen_three_bundles);

  m.def("solve_quasilinear", &solve_quasilinear, py::arg("instance"));
  m.def(
      "solve_additive",
      [](const ProblemInstance& instance, Money endowment, const std::string& cap) {
        AdditiveOptions options;
        if (cap == "valuation") {
          options.cap = AdditiveBidCap::Valuation;
        } else if (cap != "support") {
          throw ConfigError("cap must be \"support\" or \"valuation\"");
        }
        return solve_additive(instance, endowment, instance.money_utility, options);
      },
      py::arg("instance"), py::arg("endowment"), py::arg("cap") = "support");
  m.def("solve_prorated", &solve_prorated, py::arg("instance"), py::arg("pi"), py::arg("budget"));
  m.def("additive_state_count", &additive_state_count, py::arg("items"), py::arg("endowment"),
        py::arg("stage"));

  def_policy_functions<QStrategy>(m);
  def_policy_functions<AStrategy>(m);
  def_policy_functions<ProratedStrategy>(m);
  m.def(
      "trivial_eval",
      [](const ProblemInstance& instance, const QStrategy& pi, Money budget) {
        return exact_eval(instance, trivial_policy(pi, budget));
      },
      py::arg("instance"), py::arg("pi"), py::arg("budget"),
      "Exact evaluation of the unconstrained table capped at the money left.");

  m.def(
      "brute_force_optimal",
      [](const ProblemInstance& instance, Money cap) {
        auto result = brute_force_optimal(instance, cap);
        return py::make_tuple(result.value, result.bids);
      },
      py::arg("instance"), py::arg("bid_grid_cap"));

  m.def(
      "run_bench_csv",
      [](const std::string& config_json) {
        const auto rows = run_bench(bench_config_from_json(json::parse(config_json)));
        std::ostringstream out;
        write_csv(out, rows);
        return out.str();
      },
      py::arg("config_json"), "Runs a bench config given as JSON text and returns the CSV.");
}
