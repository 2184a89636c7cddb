#include <doctest.h>

#include <random>
#include <sstream>

#include "metricdim/error.hpp"
#include "metricdim/families.hpp"
#include "metricdim/graph_io.hpp"

using namespace metricdim;

TEST_CASE("edge list parsing") {
  Graph g = parse_edge_list("# comment\n\na b\nb  c\n\tc a\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);

  Graph iso = parse_edge_list("a b\nlonely\n");
  CHECK(iso.vertex_count() == 3);
  CHECK(iso.contains("lonely"));
}

TEST_CASE("edge list errors") {
  auto code = [](std::string_view text) {
    try {
      parse_edge_list(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  CHECK(code("a b c\n") == ErrorCode::kParse);
  CHECK(code("a a\n") == ErrorCode::kSelfLoop);
}

TEST_CASE("edge list round-trip") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    Graph g = random_connected_graph(1 + t, 0.3, rng);
    CHECK(parse_edge_list(format_edge_list(g)) == g);
  }
  std::vector<VertexLabel> vertices{"x", "y", "z"};
  std::vector<LabelPair> edges{{"x", "y"}};
  Graph with_isolated = build_graph(vertices, edges);
  CHECK(format_edge_list(with_isolated) == "x y\nz\n");
  CHECK(parse_edge_list(format_edge_list(with_isolated)) == with_isolated);
}

TEST_CASE("stream reading") {
  std::istringstream in("0 1\n1 2\n");
  CHECK(read_edge_list(in) == path_graph(3));
}

TEST_CASE("DOT output") {
  Graph p3 = path_graph(3);
  CHECK(format_dot(p3) ==
        "graph \"G\" {\n  \"0\";\n  \"1\";\n  \"2\";\n  \"0\" -- \"1\";\n  \"1\" -- \"2\";\n}\n");
  std::ostringstream out;
  write_dot(out, p3, "path");
  CHECK(out.str().rfind("graph \"path\" {", 0) == 0);
}
