#include "tropamalg/io.hpp"

#include <algorithm>
#include <fstream>

#include "tropamalg/errors.hpp"

namespace tropamalg {

namespace {

std::vector<std::string> string_list(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw DomainError("BadFile", std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw DomainError("BadFile", std::string(what) + " must hold strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

nlohmann::json subset_json(const GroundSet& gs, SubsetBits s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& l : gs.labels_of(s)) out.push_back(l);
  return out;
}

// Canonical listing order: lexicographic on the sorted label arrays.
std::vector<int> canonical_order(const GroundSet& gs, const std::vector<SubsetBits>& sets) {
  std::vector<int> order(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) order[i] = static_cast<int>(i);
  std::vector<std::vector<std::string>> keys;
  keys.reserve(sets.size());
  for (SubsetBits s : sets) keys.push_back(gs.labels_of(s));
  std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  return order;
}

}  // namespace

nlohmann::json matroid_to_json(const Matroid& m) {
  nlohmann::json j;
  j["groundset"] = m.groundset().labels();
  nlohmann::json flats = nlohmann::json::array();
  for (int i : canonical_order(m.groundset(), m.flats())) {
    flats.push_back(subset_json(m.groundset(), m.flat(i)));
  }
  j["flats"] = flats;
  return j;
}

Matroid matroid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("groundset") || !j.contains("flats")) {
    throw DomainError("BadFile", "matroid file needs groundset and flats");
  }
  GroundSet gs(string_list(j["groundset"], "groundset"));
  if (gs.size() < 1) throw DomainError("BadFile", "groundset must be nonempty");
  std::vector<SubsetBits> flats;
  if (!j["flats"].is_array()) throw DomainError("BadFile", "flats must be an array");
  for (const auto& f : j["flats"]) flats.push_back(gs.subset(string_list(f, "flat")));
  return Matroid::from_flats(std::move(gs), std::move(flats));
}

nlohmann::json flag_fan_to_json(const FlagFan& f) {
  nlohmann::json j;
  j["groundset"] = f.groundset().labels();
  nlohmann::json verts = nlohmann::json::array();
  nlohmann::json edges = nlohmann::json::array();
  if (!f.is_zero()) {
    const auto& p = f.poset();
    std::vector<int> order = canonical_order(f.groundset(), p.vertices());
    std::vector<int> position(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
    for (int i : order) verts.push_back(subset_json(f.groundset(), p.vertex(i)));
    std::vector<std::pair<int, int>> out_edges;
    for (auto [a, b] : f.edges()) out_edges.emplace_back(position[a], position[b]);
    std::vector<std::size_t> eorder(out_edges.size());
    for (std::size_t i = 0; i < eorder.size(); ++i) eorder[i] = i;
    std::sort(eorder.begin(), eorder.end(),
              [&](std::size_t a, std::size_t b) { return out_edges[a] < out_edges[b]; });
    auto raw_edges = f.edges();
    for (std::size_t i : eorder) {
      edges.push_back({{"from", out_edges[i].first},
                       {"to", out_edges[i].second},
                       {"weight", weight_to_string(f.edge_weight(raw_edges[i].first,
                                                                 raw_edges[i].second))}});
    }
  }
  j["vertices"] = verts;
  j["edges"] = edges;
  return j;
}

FlagFan flag_fan_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("groundset") || !j.contains("vertices") ||
      !j.contains("edges")) {
    throw DomainError("BadFile", "fan file needs groundset, vertices and edges");
  }
  GroundSet gs(string_list(j["groundset"], "groundset"));
  std::vector<SubsetBits> verts;
  for (const auto& v : j["vertices"]) verts.push_back(gs.subset(string_list(v, "vertex")));
  if (verts.empty()) return FlagFan::zero(std::move(gs));  // the zero fan
  auto has = [&](SubsetBits s) { return std::find(verts.begin(), verts.end(), s) != verts.end(); };
  if (!has(SubsetBits{}) || !has(gs.full())) {
    throw DomainError("BadFile", "the empty set and the groundset must appear as vertices");
  }
  std::vector<FlagFan::Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.contains("from") || !e.contains("to") || !e.contains("weight")) {
      throw DomainError("BadFile", "edge needs from, to and weight");
    }
    std::size_t a = e["from"].get<std::size_t>(), b = e["to"].get<std::size_t>();
    if (a >= verts.size() || b >= verts.size()) {
      throw DomainError("BadFile", "edge endpoint out of range");
    }
    edges.emplace_back(verts[a], verts[b], weight_from_string(e["weight"].get<std::string>()));
  }
  return FlagFan::make(std::move(gs), verts, edges);
}

nlohmann::json chain_fan_to_json(const WeightedChainFan& f) {
  nlohmann::json j;
  j["groundset"] = f.groundset().labels();
  nlohmann::json chains = nlohmann::json::array();
  for (const auto& [levels, w] : f.chains()) {  // map order is already canonical
    nlohmann::json jlevels = nlohmann::json::array();
    for (SubsetBits s : levels) jlevels.push_back(subset_json(f.groundset(), s));
    chains.push_back({{"levels", jlevels}, {"weight", weight_to_string(w)}});
  }
  j["chains"] = chains;
  return j;
}

WeightedChainFan chain_fan_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("groundset") || !j.contains("chains")) {
    throw DomainError("BadFile", "chain fan file needs groundset and chains");
  }
  GroundSet gs(string_list(j["groundset"], "groundset"));
  WeightedChainFan::ChainMap chains;
  for (const auto& c : j["chains"]) {
    if (!c.contains("levels") || !c.contains("weight")) {
      throw DomainError("BadFile", "chain needs levels and weight");
    }
    std::vector<SubsetBits> levels;
    for (const auto& l : c["levels"]) levels.push_back(gs.subset(string_list(l, "level")));
    chains[levels] += weight_from_string(c["weight"].get<std::string>());
  }
  return WeightedChainFan::make(std::move(gs), std::move(chains));
}

std::variant<FlagFan, WeightedChainFan> fan_from_json(const nlohmann::json& j) {
  if (j.is_object() && j.contains("chains")) return chain_fan_from_json(j);
  return flag_fan_from_json(j);
}

LatticeMap lattice_map_from_json(
    const nlohmann::json& j,
    const std::function<nlohmann::json(const std::string&)>& resolve) {
  if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("map")) {
    throw DomainError("BadFile", "lattice map file needs source, target and map");
  }
  Matroid source = matroid_from_json(resolve(j["source"].get<std::string>()));
  Matroid target = matroid_from_json(resolve(j["target"].get<std::string>()));
  std::vector<std::pair<SubsetBits, SubsetBits>> assignments;
  for (const auto& entry : j["map"]) {
    if (!entry.contains("flat") || !entry.contains("image")) {
      throw DomainError("BadFile", "map entry needs flat and image");
    }
    assignments.emplace_back(source.groundset().subset(string_list(entry["flat"], "flat")),
                             target.groundset().subset(string_list(entry["image"], "image")));
  }
  return LatticeMap::make(std::move(source), std::move(target), assignments);
}

nlohmann::json verdict_to_json(const AmalgamVerdict& v) {
  nlohmann::json j;
  if (v.matroid) {
    j["amalgam"] = matroid_to_json(*v.matroid);
  } else {
    nlohmann::json chains = nlohmann::json::array();
    for (const auto& [levels, w] : v.negative_chains) {
      nlohmann::json jlevels = nlohmann::json::array();
      for (SubsetBits s : levels) jlevels.push_back(subset_json(v.certificate_gs, s));
      chains.push_back({{"levels", jlevels}, {"weight", weight_to_string(w)}});
    }
    j["negative_chains"] = chains;
  }
  return j;
}

nlohmann::json balance_report_to_json(const BalanceReport& r, const GroundSet& gs) {
  nlohmann::json j;
  j["balanced"] = r.balanced;
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) {
    nlohmann::json face = nlohmann::json::array();
    for (SubsetBits s : v.face) face.push_back(subset_json(gs, s));
    violations.push_back({{"face", face}, {"detail", v.detail}});
  }
  j["violations"] = violations;
  return j;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("BadFile", "cannot open file", {{"path", path}});
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("BadFile", std::string("invalid JSON: ") + e.what(), {{"path", path}});
  }
  return j;
}

}  // namespace tropamalg
