#pragma once

#include <string_view>

#include <json.hpp>

#include "metricdim/graph.hpp"
#include "metricdim/resolving.hpp"

namespace metricdim {

inline constexpr std::string_view kSchema = "metric-dim/1";

// {"schema", "dimension", "witness", "exhaustive", "nodes_explored"}
nlohmann::json to_json(const DimensionResult& result);
DimensionResult dimension_result_from_json(const nlohmann::json& j);

// {"schema", "vertices": [...], "edges": [[u, v], ...]}, both sorted.
nlohmann::json graph_to_json(const Graph& g);
// Throws Parse.
Graph graph_from_json(const nlohmann::json& j);

// Accepts either a JSON graph object or edge-list text.
Graph parse_graph_text(std::string_view text);

}  // namespace metricdim
