#include <doctest.h>

#include "metricdim/error.hpp"
#include "metricdim/families.hpp"
#include "metricdim/graph_io.hpp"
#include "metricdim/serialize.hpp"

using namespace metricdim;

TEST_CASE("dimension result JSON") {
  DimensionResult r{2, {"a", "b"}, true, 17};
  auto j = to_json(r);
  CHECK(j["schema"] == "metric-dim/1");
  CHECK(j["dimension"] == 2);
  auto back = dimension_result_from_json(j);
  CHECK(back.dimension == 2);
  CHECK(back.witness == r.witness);
  CHECK(back.exhaustive);
  CHECK(back.nodes_explored == 17);
}

TEST_CASE("graph JSON round-trip") {
  std::vector<VertexLabel> vertices{"a", "b", "iso"};
  std::vector<LabelPair> edges{{"b", "a"}};
  Graph g = build_graph(vertices, edges);
  auto j = graph_to_json(g);
  CHECK(j["schema"] == "metric-dim/1");
  CHECK(j["vertices"].size() == 3);
  CHECK(j["edges"][0][0] == "a");
  CHECK(graph_from_json(j) == g);
  CHECK(graph_from_json(graph_to_json(kite_graph({}).graph)) == kite_graph({}).graph);
}

TEST_CASE("graph JSON errors") {
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::array()), Error);
  CHECK_THROWS_AS(graph_from_json({{"schema", "other/2"}, {"vertices", {}}, {"edges", {}}}),
                  Error);
  CHECK_THROWS_AS(graph_from_json({{"schema", "metric-dim/1"}, {"edges", {{"a"}}}}), Error);
}

TEST_CASE("parse_graph_text detects the format") {
  Graph g = strip_graph({1, false, 3});
  CHECK(parse_graph_text(format_edge_list(g)) == g);
  CHECK(parse_graph_text(graph_to_json(g).dump()) == g);
  CHECK(parse_graph_text("  \n" + graph_to_json(g).dump(2)) == g);
  CHECK_THROWS_AS(parse_graph_text("{ not json"), Error);
}
