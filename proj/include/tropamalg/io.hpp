#pragma once

#include <functional>
#include <string>
#include <variant>

#include <json.hpp>

#include "tropamalg/amalgam.hpp"
#include "tropamalg/correspondence.hpp"
#include "tropamalg/flag_fan.hpp"
#include "tropamalg/matroid.hpp"

namespace tropamalg {

// JSON interchange. All subsets are arrays of label strings, all weights are
// decimal strings, and every serializer emits vertices/edges/chains in a
// canonical order (lexicographic on the sorted label arrays) so diffs stay
// stable.

nlohmann::json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const nlohmann::json& j);

nlohmann::json flag_fan_to_json(const FlagFan& f);
FlagFan flag_fan_from_json(const nlohmann::json& j);

nlohmann::json chain_fan_to_json(const WeightedChainFan& f);
WeightedChainFan chain_fan_from_json(const nlohmann::json& j);

// Detects the fan flavour by its keys ("edges" vs "chains").
std::variant<FlagFan, WeightedChainFan> fan_from_json(const nlohmann::json& j);

// The map file references its source and target matroids; `resolve` turns
// those references into parsed JSON (the CLI resolves paths relative to the
// map file).
LatticeMap lattice_map_from_json(const nlohmann::json& j,
                                 const std::function<nlohmann::json(const std::string&)>& resolve);

nlohmann::json verdict_to_json(const AmalgamVerdict& v);
nlohmann::json balance_report_to_json(const BalanceReport& r, const GroundSet& gs);

nlohmann::json load_json_file(const std::string& path);

}  // namespace tropamalg
