#include "seqauction/io.hpp"

#include <fstream>

namespace seqauction {

namespace {

template <typename T>
T field(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ValidationError(where + ": missing field \"" + key + "\"");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(where + "." + key + ": " + e.what());
  }
}

const json& array_field(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_array()) {
    throw ValidationError(where + ": field \"" + key + "\" must be an array");
  }
  return doc.at(key);
}

OpponentBidModel model_from_json(const json& doc, const std::string& where) {
  std::vector<PmfPoint> pmf;
  for (const auto& entry : array_field(doc, "pmf", where)) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number()) {
      throw ValidationError(where + ".pmf: entries must be [integer value, probability]");
    }
    pmf.push_back({entry[0].get<Money>(), entry[1].get<double>()});
  }
  return OpponentBidModel(std::move(pmf));
}

Valuation valuation_from_json(const json& doc, int items) {
  const auto type = field<std::string>(doc, "type", "valuation");
  if (type == "bundles") {
    std::vector<Bundle> bundles;
    for (const auto& b : array_field(doc, "bundles", "valuation")) {
      ItemMask mask = 0;
      for (const auto& item : array_field(b, "items", "valuation.bundles[]")) {
        if (!item.is_number_integer() || item.get<long long>() < 0 ||
            item.get<long long>() >= kMaxItems) {
          throw ValidationError("valuation.bundles[].items: item index out of range");
        }
        mask |= item_bit(item.get<int>());
      }
      bundles.push_back({mask, field<double>(b, "value", "valuation.bundles[]")});
    }
    return Valuation::bundles(items, std::move(bundles));
  }
  if (type == "table") {
    if (items < 0 || items > kMaxItems) throw ValidationError("items: out of range");
    std::vector<double> values(subset_count(items), 0.0);
    std::vector<bool> seen(values.size(), false);
    for (const auto& entry : array_field(doc, "entries", "valuation")) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_unsigned() ||
          !entry[1].is_number()) {
        throw ValidationError("valuation.entries: entries must be [mask, value]");
      }
      const auto mask = entry[0].get<std::uint64_t>();
      if (mask >= values.size()) throw ValidationError("valuation.entries: mask out of range");
      values[mask] = entry[1].get<double>();
      seen[mask] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw ValidationError("valuation.entries: table must list every subset");
    }
    return Valuation::table(items, std::move(values));
  }
  throw ValidationError("valuation.type must be \"bundles\" or \"table\"");
}

json stage_entries(const std::vector<Money>& bids, const std::vector<double>& values) {
  json entries = json::array();
  for (std::size_t mask = 0; mask < bids.size(); ++mask) {
    entries.push_back({{"mask", mask}, {"bid", bids[mask]}, {"value", values[mask]}});
  }
  return entries;
}

// Reads "stages" into a bids table sized for `items`; values are optional.
void read_stage_bids(const json& doc, int items, std::vector<std::vector<Money>>& bids,
                     std::vector<std::vector<double>>* values) {
  bids.assign(items, {});
  if (values) values->assign(items, {});
  std::vector<bool> seen(items, false);
  for (const auto& stage : array_field(doc, "stages", "strategy")) {
    const int t = field<int>(stage, "t", "strategy.stages[]");
    if (t < 0 || t >= items) throw MismatchError("strategy stage " + std::to_string(t) + " is out of range");
    bids[t].assign(subset_count(t), 0);
    if (values) (*values)[t].assign(subset_count(t), 0.0);
    std::vector<bool> filled(subset_count(t), false);
    for (const auto& entry : array_field(stage, "entries", "strategy.stages[]")) {
      const auto mask = field<std::uint64_t>(entry, "mask", "strategy.stages[].entries[]");
      if (mask >= subset_count(t)) throw MismatchError("strategy mask out of range at stage " + std::to_string(t));
      bids[t][mask] = field<Money>(entry, "bid", "strategy.stages[].entries[]");
      if (values && entry.contains("value")) (*values)[t][mask] = entry.at("value").get<double>();
      filled[mask] = true;
    }
    if (std::find(filled.begin(), filled.end(), false) != filled.end()) {
      throw ValidationError("strategy stage " + std::to_string(t) + " does not list every subset");
    }
    seen[t] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw MismatchError("strategy does not cover every stage of the instance");
  }
}

void check_items(const json& doc, const ProblemInstance& instance) {
  if (!doc.contains("items")) return;
  const int items = field<int>(doc, "items", "strategy");
  if (items != instance.items) {
    throw MismatchError("strategy was solved for " + std::to_string(items) +
                        " items, instance has " + std::to_string(instance.items));
  }
}

}  // namespace

ProblemInstance instance_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("instance: expected a JSON object");
  ProblemInstance instance;
  instance.items = field<int>(doc, "items", "instance");
  const auto& distributions = array_field(doc, "distributions", "instance");
  for (std::size_t i = 0; i < distributions.size(); ++i) {
    instance.models.push_back(
        model_from_json(distributions[i], "distributions[" + std::to_string(i) + "]"));
  }
  if (!doc.contains("valuation")) throw ValidationError("instance: missing field \"valuation\"");
  instance.valuation = valuation_from_json(doc.at("valuation"), instance.items);
  if (doc.contains("endowment") && !doc.at("endowment").is_null()) {
    instance.endowment = field<Money>(doc, "endowment", "instance");
  }
  if (doc.contains("budget") && !doc.at("budget").is_null()) {
    instance.budget = field<Money>(doc, "budget", "instance");
  }
  return instance;
}

json to_json(const ProblemInstance& instance) {
  json doc;
  doc["items"] = instance.items;
  json distributions = json::array();
  for (const auto& model : instance.models) {
    json pmf = json::array();
    for (const auto& p : model.pmf()) pmf.push_back({p.value, p.probability});
    distributions.push_back({{"pmf", pmf}});
  }
  doc["distributions"] = distributions;

  if (const auto* table = std::get_if<ExplicitTable>(&instance.valuation.form)) {
    json entries = json::array();
    for (std::size_t mask = 0; mask < table->values.size(); ++mask) {
      entries.push_back({mask, table->values[mask]});
    }
    doc["valuation"] = {{"type", "table"}, {"entries", entries}};
  } else {
    json bundles = json::array();
    for (const auto& b : std::get<BundleMax>(instance.valuation.form).bundles) {
      json items = json::array();
      for (int i = 0; i < kMaxItems; ++i) {
        if (b.items & item_bit(i)) items.push_back(i);
      }
      bundles.push_back({{"items", items}, {"value", b.value}});
    }
    doc["valuation"] = {{"type", "bundles"}, {"bundles", bundles}};
  }
  if (instance.endowment) doc["endowment"] = *instance.endowment;
  if (instance.budget) doc["budget"] = *instance.budget;
  return doc;
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

ProblemInstance load_instance(const std::filesystem::path& path) {
  return instance_from_json(load_json(path));
}

void save_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

json to_json(const QStrategy& strategy) {
  json stages = json::array();
  for (int t = 0; t < strategy.items; ++t) {
    stages.push_back({{"t", t}, {"entries", stage_entries(strategy.bids[t], strategy.values[t])}});
  }
  return {{"mode", "quasilinear"}, {"items", strategy.items}, {"stages", stages}};
}

json to_json(const AStrategy& strategy, bool root_only) {
  json doc = {{"mode", "additive"}, {"items", strategy.items}, {"endowment", strategy.endowment}};
  if (root_only) {
    doc["root_only"] = true;
    doc["bid"] = strategy.bid({0, 0, strategy.endowment});
    doc["value"] = strategy.root_value();
    return doc;
  }
  json stages = json::array();
  for (int t = 0; t < strategy.items; ++t) {
    json entries = json::array();
    for (const auto& s : strategy.states(t)) {
      entries.push_back(
          {{"mask", s.subset}, {"money", s.money}, {"bid", strategy.bid(s)}, {"value", strategy.value(s)}});
    }
    stages.push_back({{"t", t}, {"entries", std::move(entries)}});
  }
  doc["stages"] = std::move(stages);
  return doc;
}

json to_json(const ProratedStrategy& strategy) {
  json stages = json::array();
  for (int t = 0; t < strategy.items; ++t) {
    json entries = stage_entries(strategy.bids[t], strategy.values[t]);
    for (std::size_t mask = 0; mask < entries.size(); ++mask) {
      entries[mask]["z_max"] = strategy.caps[t][mask];
    }
    stages.push_back({{"t", t}, {"entries", std::move(entries)}});
  }
  return {{"mode", "prorated"},
          {"items", strategy.items},
          {"budget", strategy.budget},
          {"certified_max_payment", strategy.certified_max_payment},
          {"clamp_count", strategy.clamp_count},
          {"stages", stages}};
}

json trivial_to_json(const QStrategy& pi, Money budget) {
  json doc = to_json(pi);
  doc["mode"] = "trivial";
  doc["budget"] = budget;
  return doc;
}

json to_json(const EvalReport& report) {
  json doc = {{"expected_utility", report.expected_utility},
              {"max_payment", report.max_payment},
              {"path_count", report.path_count},
              {"probability_mass", report.probability_mass}};
  if (!report.bundle_probability.empty()) doc["bundle_probability"] = report.bundle_probability;
  return doc;
}

json to_json(const MCReport& report) {
  return {{"mean", report.mean},
          {"std_error", report.std_error},
          {"samples", report.samples},
          {"seed", report.seed}};
}

QStrategy qstrategy_from_json(const json& doc, const ProblemInstance& instance) {
  check_items(doc, instance);
  QStrategy pi;
  pi.items = instance.items;
  read_stage_bids(doc, instance.items, pi.bids, &pi.values);
  pi.values.push_back(instance.valuation.tabulate());
  return pi;
}

LoadedStrategy strategy_from_json(const json& doc, const ProblemInstance& instance) {
  const auto mode = field<std::string>(doc, "mode", "strategy");
  check_items(doc, instance);

  if (mode == "quasilinear") {
    return {mode, make_policy(qstrategy_from_json(doc, instance)), QuasiLinearUtility{}};
  }
  if (mode == "trivial") {
    const auto budget = field<Money>(doc, "budget", "strategy");
    return {mode, trivial_policy(qstrategy_from_json(doc, instance), budget), QuasiLinearUtility{}};
  }
  if (mode == "prorated") {
    ProratedStrategy prorated;
    prorated.items = instance.items;
    prorated.budget = field<Money>(doc, "budget", "strategy");
    read_stage_bids(doc, instance.items, prorated.bids, nullptr);
    return {mode, make_policy(prorated), QuasiLinearUtility{}};
  }
  if (mode == "additive") {
    if (doc.value("root_only", false)) {
      throw ValidationError("a root-only additive strategy cannot be executed");
    }
    AStrategy a;
    a.items = instance.items;
    a.endowment = field<Money>(doc, "endowment", "strategy");
    if (a.endowment < 0) throw ValidationError("strategy.endowment must be >= 0");
    const auto width = static_cast<std::size_t>(a.endowment + 1);
    a.bids.assign(instance.items, {});
    for (const auto& stage : array_field(doc, "stages", "strategy")) {
      const int t = field<int>(stage, "t", "strategy.stages[]");
      if (t < 0 || t >= instance.items) throw MismatchError("strategy stage out of range");
      a.bids[t].assign(subset_count(t) * width, 0);
      for (const auto& entry : array_field(stage, "entries", "strategy.stages[]")) {
        const auto mask = field<std::uint64_t>(entry, "mask", "strategy.stages[].entries[]");
        const auto money = field<Money>(entry, "money", "strategy.stages[].entries[]");
        if (mask >= subset_count(t) || money < 0 || money > a.endowment) {
          throw MismatchError("strategy state out of range at stage " + std::to_string(t));
        }
        a.bids[t][a.index(static_cast<ItemMask>(mask), money)] =
            field<Money>(entry, "bid", "strategy.stages[].entries[]");
      }
    }
    for (int t = 0; t < instance.items; ++t) {
      if (a.bids[t].empty()) throw MismatchError("strategy does not cover every stage");
    }
    return {mode, make_policy(a), AdditiveUtility{a.endowment, instance.money_utility}};
  }
  throw ValidationError("strategy.mode \"" + mode + "\" is not recognised");
}

}  // namespace seqauction
