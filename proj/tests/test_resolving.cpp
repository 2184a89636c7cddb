#include <doctest.h>

#include <random>

#include "metricdim/error.hpp"
#include "metricdim/families.hpp"
#include "metricdim/oracle.hpp"
#include "metricdim/resolving.hpp"

using namespace metricdim;

namespace {

std::vector<std::uint32_t> values(const MetricCode& code) {
  std::vector<std::uint32_t> out;
  for (auto d : code.entries) out.push_back(d.value());
  return out;
}

}  // namespace

TEST_CASE("metric_code examples") {
  Graph p3 = build_graph({{"a", "b"}, {"b", "c"}});
  std::vector<VertexLabel> w{"a"};
  CHECK(values(metric_code(p3, w, "c")) == std::vector<std::uint32_t>{2});

  Graph g1 = strip_graph({1, true, 10});
  auto canon = labels_of(strip_canonical_set(1));
  CHECK(values(metric_code(g1, canon, "v0_0")) == std::vector<std::uint32_t>{0, 1, 1});

  auto nb = nonbinary_graph(NonbinarySpec::canonical(2));
  std::vector<VertexLabel> digits{"w1", "w2"};
  CHECK(values(metric_code(nb.graph, digits, "r20_1")) == std::vector<std::uint32_t>{1, 3});
}

TEST_CASE("metric_code errors") {
  Graph p3 = path_graph(3);
  std::vector<VertexLabel> none;
  CHECK_THROWS_AS(metric_code(p3, none, "0"), Error);
  std::vector<VertexLabel> bad{"9"};
  CHECK_THROWS_AS(metric_code(p3, bad, "0"), Error);
}

TEST_CASE("is_resolving examples") {
  std::vector<VertexLabel> rungs{"v0_0", "v0_1"};
  CHECK(is_resolving(ladder_graph(10), rungs));

  Graph g1 = strip_graph({1, false, 10});
  std::vector<VertexLabel> left;
  for (std::size_t a = 0; a <= 3; ++a) {
    left.push_back(StripVertex{a, 0}.label());
    left.push_back(StripVertex{a, 1}.label());
  }
  CHECK_FALSE(is_resolving(g1, left));
  auto pair = find_unresolved_pair(g1, left);
  REQUIRE(pair);
  CHECK(StripVertex::parse(pair->first).column >= 4);
  CHECK(metric_code(g1, left, "v4_0") == metric_code(g1, left, "v4_1"));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    Graph g = random_connected_graph(3 + t, 0.3, rng);
    CHECK(is_resolving(g, g.labels()));
  }
}

TEST_CASE("empty landmark list") {
  std::vector<VertexLabel> none;
  CHECK(is_resolving(path_graph(1), none));
  CHECK_FALSE(is_resolving(path_graph(2), none));
}

TEST_CASE("unreachable entries compare equal") {
  // Two components: {a, b} and {c, d}. From a, both c and d are unreachable.
  Graph g = build_graph({{"a", "b"}, {"c", "d"}});
  std::vector<VertexLabel> w{"a"};
  auto pair = find_unresolved_pair(g, w);
  REQUIRE(pair);
  CHECK(*pair == LabelPair{"c", "d"});
}

TEST_CASE("find_unresolved_pair returns the least pair") {
  // Star with centre 0: leaves 1..4 share the code from the centre.
  Graph s = star_graph(4);
  std::vector<VertexLabel> w{"0"};
  CHECK(*find_unresolved_pair(s, w) == LabelPair{"1", "2"});
  std::vector<VertexLabel> w2{"0", "1"};
  CHECK(*find_unresolved_pair(s, w2) == LabelPair{"2", "3"});
}

TEST_CASE("is_resolving agrees with the oracle") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    Graph g = random_connected_graph(2 + t % 9, 0.35, rng);
    std::vector<VertexLabel> w;
    for (const auto& l : g.labels()) {
      if (rng() % 3 == 0) w.push_back(l);
    }
    if (w.empty()) w.push_back(g.label(0));
    CHECK(is_resolving(g, w) == oracle::resolves(g, w));
  }
}

TEST_CASE("greedy_resolving_set") {
  CHECK(greedy_resolving_set(path_graph(5)) == std::vector<VertexLabel>{"0"});
  CHECK(greedy_resolving_set(complete_graph(4)).size() == 3);
  auto ladder = ladder_graph(6);
  auto w = greedy_resolving_set(ladder);
  CHECK(w.size() >= 2);
  CHECK(is_resolving(ladder, w));
  CHECK_THROWS_AS(greedy_resolving_set(strip_graph({0, false, 3})), Error);
}

TEST_CASE("block_lower_bound_check") {
  auto nb = nonbinary_graph(NonbinarySpec::canonical(2));
  Graph plus = add_edge(nb.graph, nb.critical_edge.first, nb.critical_edge.second);
  CHECK(nb.pages.size() == 8);
  CHECK(block_lower_bound_check(plus, nb.pages, nb.page_tips));
  CHECK_FALSE(block_lower_bound_check(nb.graph, nb.pages, nb.page_tips));

  std::vector<std::vector<VertexLabel>> one{{"0"}};
  std::vector<VertexLabel> rep{"0"};
  CHECK(block_lower_bound_check(path_graph(3), one, rep));

  std::vector<std::vector<VertexLabel>> overlap{{"0", "1"}, {"1", "2"}};
  std::vector<VertexLabel> reps{"0", "2"};
  try {
    block_lower_bound_check(path_graph(3), overlap, reps);
    FAIL("expected BlockOverlap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBlockOverlap);
  }
}

TEST_CASE("twin_pairs and degree_lower_bound") {
  auto twins = twin_pairs(DistanceTable(complete_graph(3)));
  CHECK(twins.size() == 3);
  CHECK(twin_pairs(DistanceTable(path_graph(4))).empty());
  CHECK(twin_pairs(DistanceTable(star_graph(3))).size() == 3);

  CHECK(degree_lower_bound(0) == 1);
  CHECK(degree_lower_bound(2) == 1);
  CHECK(degree_lower_bound(3) == 2);
  CHECK(degree_lower_bound(8) == 2);
  CHECK(degree_lower_bound(9) == 3);
  CHECK(degree_lower_bound(26) == 3);
  CHECK(degree_lower_bound(27) == 4);
}
