#include "packcert/io/game_json.hpp"

#include <algorithm>

namespace packcert::io {

namespace {

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Json sorted_blocks(std::vector<std::vector<NodeId>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.num_nodes()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw InputError("graph: expected an object with 'n' and 'edges'");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 0 || j["n"].get<long>() > 100000) {
    throw InputError("graph: 'n' must be a non-negative integer");
  }
  if (!j["edges"].is_array()) throw InputError("graph: 'edges' must be an array");
  Graph g(j["n"].get<int>());
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw InputError("graph: every edge must be a pair of node ids");
    }
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

Side side_from_string(const std::string& s) {
  if (s == "short") return Side::kShort;
  if (s == "cut") return Side::kCut;
  throw InputError("unknown side '" + s + "' (short|cut)");
}

Variant variant_from_string(const std::string& s) {
  if (s == "global") return Variant::kGlobal;
  if (s == "st") return Variant::kSt;
  throw InputError("unknown variant '" + s + "' (global|st)");
}

std::string_view to_string(Tag t) {
  switch (t) {
    case Tag::kShort:
      return "short";
    case Tag::kCut:
      return "cut";
    default:
      return "none";
  }
}

Json to_json(const GameAnalysis& a) {
  Json cert;
  if (a.winner == Side::kShort) {
    cert["trees"] = {sorted(a.trees[0]), sorted(a.trees[1])};
    cert["region"] = sorted(a.region);
    cert["first_move"] = a.first_move ? Json(*a.first_move) : Json(nullptr);
  } else {
    cert["blocks"] = sorted_blocks(a.blocks);
    cert["region"] = sorted(a.region);
    cert["deficit"] = a.deficit;
    cert["closed_form"] = a.closed_form;
  }
  return {{"winner", packcert::to_string(a.winner)}, {"certificate", cert}};
}

Json to_json(const StrategyCore& core) {
  Json j;
  j["side"] = packcert::to_string(core.side);
  j["guaranteed"] = core.guaranteed;
  j["trees"] = {sorted(core.trees[0]), sorted(core.trees[1])};
  j["region"] = sorted(core.region);
  j["blocks"] = sorted_blocks(core.blocks);
  return j;
}

Json to_json(const Move& m) { return {{"side", packcert::to_string(m.side)}, {"edge", m.edge}}; }

Json to_json(const GameState& state) {
  const auto& cfg = state.config();
  Json j;
  j["graph"] = to_json(cfg.graph);
  j["variant"] = packcert::to_string(cfg.variant);
  j["first"] = packcert::to_string(cfg.first);
  if (cfg.variant == Variant::kSt) {
    j["s"] = cfg.s;
    j["t"] = cfg.t;
  }
  Json tags = Json::array();
  for (Tag t : state.tags()) tags.push_back(to_string(t));
  j["tags"] = tags;
  Json history = Json::array();
  for (const Move& m : state.history()) history.push_back(to_json(m));
  j["history"] = history;
  const auto winner = state.winner();
  j["to_move"] = winner ? Json(nullptr) : Json(packcert::to_string(state.to_move()));
  j["legal_moves"] = state.legal_moves();
  j["winner"] = winner ? Json(packcert::to_string(*winner)) : Json(nullptr);
  return j;
}

}  // namespace packcert::io
