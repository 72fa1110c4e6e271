// JSON views of game objects shared by the CLI and the HTTP server.
#pragma once

#include <json.hpp>

#include "packcert/game.hpp"

namespace packcert::io {

using Json = nlohmann::ordered_json;

Json to_json(const Graph& g);  // {"n": .., "edges": [[u, v], ..]}
/// Throws InputError on a malformed graph object.
Graph graph_from_json(const Json& j);

Side side_from_string(const std::string& s);
Variant variant_from_string(const std::string& s);
std::string_view to_string(Tag t);

Json to_json(const GameAnalysis& a);
Json to_json(const StrategyCore& core);
Json to_json(const GameState& state);
Json to_json(const Move& m);

}  // namespace packcert::io
