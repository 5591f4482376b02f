#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "seqauction/additive.hpp"
#include "seqauction/budget.hpp"
#include "seqauction/core.hpp"
#include "seqauction/evaluation.hpp"
#include "seqauction/quasilinear.hpp"

namespace seqauction {

using json = nlohmann::json;

// Instance files:
//   { "items": n,
//     "distributions": [ { "pmf": [[value, prob], ...] }, ... ],
//     "valuation": { "type": "bundles", "bundles": [ { "items": [i, ...], "value": x }, ... ] }
//                | { "type": "table", "entries": [[mask, value], ...] },
//     "endowment": m (optional), "budget": b (optional) }
// Schema problems throw ValidationError; the result is not validated further.
ProblemInstance instance_from_json(const json& doc);
json to_json(const ProblemInstance& instance);

ProblemInstance load_instance(const std::filesystem::path& path);
json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const json& doc);

json to_json(const QStrategy& strategy);
json to_json(const AStrategy& strategy, bool root_only = false);
json to_json(const ProratedStrategy& strategy);
/// The unconstrained table plus the budget the runtime policy tracks.
json trivial_to_json(const QStrategy& pi, Money budget);

json to_json(const EvalReport& report);
json to_json(const MCReport& report);

/// A strategy file turned back into something executable.
struct LoadedStrategy {
  std::string mode;
  ExecutionPolicy policy;
  UtilityMode utility;
};

/// Reads any strategy document written above. Terminal values come from
/// `instance`; a document sized for a different instance is a MismatchError.
LoadedStrategy strategy_from_json(const json& doc, const ProblemInstance& instance);

QStrategy qstrategy_from_json(const json& doc, const ProblemInstance& instance);

}  // namespace seqauction
