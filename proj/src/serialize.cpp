#include "metricdim/serialize.hpp"

#include <algorithm>
#include <cctype>

#include "metricdim/graph_io.hpp"

namespace metricdim {

nlohmann::json to_json(const DimensionResult& result) {
  return {{"schema", kSchema},
          {"dimension", result.dimension},
          {"witness", result.witness},
          {"exhaustive", result.exhaustive},
          {"nodes_explored", result.nodes_explored}};
}

DimensionResult dimension_result_from_json(const nlohmann::json& j) {
  try {
    DimensionResult r;
    r.dimension = j.at("dimension").get<std::size_t>();
    r.witness = j.at("witness").get<std::vector<VertexLabel>>();
    r.exhaustive = j.at("exhaustive").get<bool>();
    r.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.labeled_edges()) edges.push_back({u, v});
  return {{"schema", kSchema}, {"vertices", g.labels()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    auto vertices = j.value("vertices", std::vector<VertexLabel>{});
    std::vector<LabelPair> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::kParse, "edge must be a pair");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return build_graph(vertices, edges);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

Graph parse_graph_text(std::string_view text) {
  auto first = std::find_if(text.begin(), text.end(),
                            [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first != text.end() && *first == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, e.what());
    }
    return graph_from_json(j);
  }
  return parse_edge_list(text);
}

}  // namespace metricdim
