#include <doctest.h>

#include <random>
#include <vector>

#include "metricdim/error.hpp"
#include "metricdim/families.hpp"
#include "metricdim/graph.hpp"
#include "metricdim/oracle.hpp"

using namespace metricdim;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("build_graph: empty and deduplicated edges") {
  std::vector<LabelPair> none;
  Graph empty = build_graph(std::span<const LabelPair>(none));
  CHECK(empty.vertex_count() == 0);
  CHECK(empty.edge_count() == 0);

  Graph g = build_graph({{"a", "b"}, {"b", "a"}});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge("a", "b"));
  CHECK(g.has_edge("b", "a"));
}

TEST_CASE("build_graph: ids follow sorted labels") {
  Graph g = build_graph({{"zeta", "alpha"}, {"mid", "alpha"}});
  CHECK(g.labels() == std::vector<VertexLabel>{"alpha", "mid", "zeta"});
  CHECK(g.id("alpha") == 0);
  CHECK(g.id("zeta") == 2);
  CHECK(g.neighbors(0).size() == 2);
  CHECK(g.degree(g.id("mid")) == 1);
}

TEST_CASE("build_graph: errors") {
  CHECK(code_of([] { build_graph({{"a", "a"}}); }) == ErrorCode::kSelfLoop);
  CHECK(code_of([] { build_graph({{"a", ""}}); }) == ErrorCode::kInvalidLabel);
  CHECK(code_of([] { build_graph({{"a b", "c"}}); }) == ErrorCode::kInvalidLabel);
  CHECK(code_of([] { build_graph({{"a", "b"}}).id("c"); }) == ErrorCode::kUnknownVertex);
}

TEST_CASE("edge endpoints join the vertex list") {
  std::vector<VertexLabel> vertices{"a"};
  std::vector<LabelPair> edges{{"a", "b"}};
  CHECK(build_graph(vertices, edges).labels() == std::vector<VertexLabel>{"a", "b"});
}

TEST_CASE("isolated vertices are kept") {
  std::vector<VertexLabel> vertices{"a", "b", "c"};
  std::vector<LabelPair> edges{{"a", "b"}};
  Graph g = build_graph(vertices, edges);
  CHECK(g.vertex_count() == 3);
  CHECK(g.degree(g.id("c")) == 0);
  CHECK_FALSE(is_connected(g));
}

TEST_CASE("add_edge and remove_edge") {
  Graph p3 = build_graph({{"a", "b"}, {"b", "c"}});
  Graph tri = add_edge(p3, "a", "c");
  CHECK(tri == build_graph({{"a", "b"}, {"b", "c"}, {"a", "c"}}));
  CHECK(p3.edge_count() == 2);  // original untouched

  Graph c4 = cycle_graph(4);
  Graph p4 = remove_edge(c4, "0", "3");
  CHECK(p4 == path_graph(4));

  CHECK(code_of([&] { add_edge(p3, "a", "b"); }) == ErrorCode::kEdgeExists);
  CHECK(code_of([&] { add_edge(p3, "a", "a"); }) == ErrorCode::kSelfLoop);
  CHECK(code_of([&] { add_edge(p3, "a", "x"); }) == ErrorCode::kUnknownVertex);
  CHECK(code_of([&] { remove_edge(p3, "a", "c"); }) == ErrorCode::kEdgeMissing);
}

TEST_CASE("bfs_distances") {
  Graph p3 = build_graph({{"a", "b"}, {"b", "c"}});
  DistanceMap d = bfs_distances(p3, "a");
  CHECK(d.at(p3, "a") == Distance::hops(0));
  CHECK(d.at(p3, "b") == Distance::hops(1));
  CHECK(d.at(p3, "c") == Distance::hops(2));

  std::vector<VertexLabel> vertices{"a", "b", "z"};
  std::vector<LabelPair> edges{{"a", "b"}};
  Graph split = build_graph(vertices, edges);
  CHECK_FALSE(bfs_distances(split, "a").at(split, "z").reachable());
}

TEST_CASE("Distance ordering and access") {
  CHECK(Distance::unreachable() == Distance::unreachable());
  CHECK(Distance::hops(1000) < Distance::unreachable());
  CHECK(Distance::hops(1) < Distance::hops(2));
  CHECK_THROWS_AS(Distance::unreachable().value(), Error);
}

TEST_CASE("connectivity and degree") {
  CHECK_FALSE(is_connected(strip_graph({0, false, 5})));
  CHECK(is_connected(ladder_graph(5)));
  CHECK(max_degree(complete_graph(5)) == 4);
  CHECK(max_degree(star_graph(6)) == 6);
}

TEST_CASE("bfs matches Floyd-Warshall on random graphs") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 30; ++t) {
    Graph g = random_connected_graph(2 + t % 15, 0.2, rng);
    auto fw = oracle::all_pairs_distances(g);
    DistanceTable table(g);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        REQUIRE(table(u, v).reachable());
        CHECK(static_cast<int>(table(u, v).value()) == fw[u][v]);
      }
    }
  }
}
