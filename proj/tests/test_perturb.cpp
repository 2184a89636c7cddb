#include <doctest.h>

#include <algorithm>
#include <random>

#include "metricdim/error.hpp"
#include "metricdim/families.hpp"
#include "metricdim/oracle.hpp"
#include "metricdim/perturb.hpp"
#include "metricdim/resolving.hpp"

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

TEST_CASE("integer_interval") {
  CHECK(integer_interval(2, 5) == std::vector<std::int64_t>{2, 3, 4, 5});
  CHECK(integer_interval(5, 2) == std::vector<std::int64_t>{2, 3, 4, 5});
  CHECK(integer_interval(3, 3) == std::vector<std::int64_t>{3});
  CHECK(integer_interval(-1, 1) == std::vector<std::int64_t>{-1, 0, 1});
}

TEST_CASE("augment_addition examples") {
  Graph p3 = build_graph({{"a", "b"}, {"b", "c"}});
  std::vector<VertexLabel> w{"a"};
  auto w2 = augment_addition(p3, w, "a", "c");
  CHECK(w2 == std::vector<VertexLabel>{"a", "b", "c"});
  CHECK(is_resolving(add_edge(p3, "a", "c"), w2));
}

TEST_CASE("augment_addition errors") {
  Graph p3 = build_graph({{"a", "b"}, {"b", "c"}});
  std::vector<VertexLabel> w{"a"};
  std::vector<VertexLabel> bad{"b"};
  CHECK(code_of([&] { augment_addition(p3, w, "a", "a"); }) == ErrorCode::kSelfLoop);
  CHECK(code_of([&] { augment_addition(p3, w, "a", "b"); }) == ErrorCode::kEdgeExists);
  CHECK(code_of([&] { augment_addition(p3, bad, "a", "c"); }) == ErrorCode::kNotResolving);
  CHECK(code_of([&] { augment_addition(p3, w, "a", "zz"); }) == ErrorCode::kUnknownVertex);
  Graph split = build_graph({{"a", "b"}, {"c", "d"}});
  std::vector<VertexLabel> all = split.labels();
  CHECK(code_of([&] { augment_addition(split, all, "a", "c"); }) == ErrorCode::kDisconnected);
}

TEST_CASE("augment_removal examples") {
  Graph c4 = cycle_graph(4);
  std::vector<VertexLabel> w{"0", "1"};
  auto w2 = augment_removal(c4, w, "2", "3");
  CHECK(w2 == std::vector<VertexLabel>{"0", "1", "2", "3"});
  CHECK(is_resolving(remove_edge(c4, "2", "3"), w2));

  Graph tri = complete_graph(3);
  std::vector<VertexLabel> ab{"0", "1"};
  CHECK(augment_removal(tri, ab, "0", "2") == std::vector<VertexLabel>{"0", "1", "2"});

  Graph g1 = strip_graph({1, true, 8});
  auto canon = labels_of(strip_canonical_set(1));
  auto w3 = augment_removal(g1, canon, "v0_0", "v0_1");
  CHECK(w3 == canon);  // both endpoints already present
  CHECK(is_resolving(remove_edge(g1, "v0_0", "v0_1"), w3));
}

TEST_CASE("augment_removal errors") {
  Graph p3 = path_graph(3);
  std::vector<VertexLabel> w{"0"};
  CHECK(code_of([&] { augment_removal(p3, w, "0", "2"); }) == ErrorCode::kEdgeMissing);
  CHECK(code_of([&] { augment_removal(p3, w, "0", "1"); }) == ErrorCode::kDisconnectsGraph);
  std::vector<VertexLabel> mid{"1"};
  CHECK(code_of([&] { augment_removal(cycle_graph(4), mid, "0", "1"); }) ==
        ErrorCode::kNotResolving);
}

TEST_CASE("edit sequences") {
  Graph c6 = cycle_graph(6);
  std::vector<VertexLabel> w{"0", "1"};
  CHECK(apply_edit_sequence(c6, w, {}).size() == 1);

  EditSequence edits{{EditKind::kAdd, "0", "3"}, {EditKind::kRemove, "0", "3"}};
  auto steps = apply_edit_sequence(c6, w, edits);
  REQUIRE(steps.size() == 3);
  CHECK(steps[2].graph == c6);
  CHECK(std::includes(steps[2].witness.begin(), steps[2].witness.end(), w.begin(), w.end()));
  for (const auto& s : steps) CHECK(is_resolving(s.graph, s.witness));
}

TEST_CASE("parse_edit_sequence") {
  auto edits = parse_edit_sequence("# edits\nadd a b\n\nremove b c\n");
  REQUIRE(edits.size() == 2);
  CHECK(edits[0] == Edit{EditKind::kAdd, "a", "b"});
  CHECK(edits[1] == Edit{EditKind::kRemove, "b", "c"});
  CHECK(to_string(EditKind::kAdd) == "add");
  CHECK(code_of([] { parse_edit_sequence("flip a b\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_edit_sequence("add a\n"); }) == ErrorCode::kParse);
}

TEST_CASE("random edits keep resolving sets") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    Graph g = random_connected_graph(10, 0.25, rng);
    auto w = greedy_resolving_set(g);
    EditSequence edits;
    Graph cur = g;
    while (edits.size() < 3) {
      auto u = cur.label(static_cast<VertexId>(rng() % 10));
      auto v = cur.label(static_cast<VertexId>(rng() % 10));
      if (u == v) continue;
      if (!cur.has_edge(u, v)) {
        edits.push_back({EditKind::kAdd, u, v});
        cur = add_edge(cur, u, v);
      } else if (is_connected(remove_edge(cur, u, v))) {
        edits.push_back({EditKind::kRemove, u, v});
        cur = remove_edge(cur, u, v);
      }
    }
    for (const auto& s : apply_edit_sequence(g, w, edits)) {
      CHECK(oracle::resolves(s.graph, s.witness));
    }
  }
}
