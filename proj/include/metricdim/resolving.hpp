#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "metricdim/graph.hpp"

namespace metricdim {

// Distances from one vertex to an ordered landmark list.
struct MetricCode {
  std::vector<VertexLabel> landmarks;
  std::vector<Distance> entries;

  bool operator==(const MetricCode&) const = default;
};

// Throws EmptyLandmarks, UnknownVertex.
MetricCode metric_code(const Graph& g, std::span<const VertexLabel> landmarks,
                       std::string_view vertex);

// Codes compare entry-wise; UNREACHABLE entries equal each other and
// differ from every finite distance. An empty landmark list resolves only
// graphs with at most one vertex. Throws UnknownVertex.
bool is_resolving(const Graph& g, std::span<const VertexLabel> landmarks);

// Lexicographically least (u, v), u < v by label, with equal codes.
std::optional<LabelPair> find_unresolved_pair(const Graph& g,
                                              std::span<const VertexLabel> landmarks);

// Id-based variants for hot loops.
bool is_resolving(const DistanceTable& dist, std::span<const VertexId> landmarks);
std::optional<std::pair<VertexId, VertexId>> find_unresolved_pair(
    const DistanceTable& dist, std::span<const VertexId> landmarks);

struct DimensionResult {
  std::size_t dimension = 0;
  std::vector<VertexLabel> witness;
  bool exhaustive = false;
  std::uint64_t nodes_explored = 0;
};

struct ExactOptions {
  // Largest set size tried; defaults to |V| - 1.
  std::optional<std::size_t> max_k;
  // 0 means unlimited. Counted across all workers.
  std::uint64_t node_budget = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Workers split each size level by the first landmark.
  unsigned threads = 1;
};

// Smallest resolving set, and among those the lexicographically least under
// vertex id order (= sorted labels). Sizes below ceil(log3(maxdeg + 1)) are
// skipped; any twin pair must meet the witness. Graphs with at most one
// vertex have dimension 0.
// Throws Disconnected, Exceeded (nothing within max_k), Budget.
DimensionResult metric_dimension_exact(const Graph& g, const ExactOptions& options = {});

// Repeatedly adds the vertex splitting the most still-equal code pairs,
// least label on ties. The result is verified before returning.
// Throws Disconnected.
std::vector<VertexLabel> greedy_resolving_set(const Graph& g);

// True iff, for every pair of blocks i < j, no vertex outside
// blocks[i] ∪ blocks[j] separates reps[i] from reps[j]. A true result
// certifies dimension >= blocks.size() - 1.
// Throws BlockOverlap, UnknownVertex, InvalidArgument.
bool block_lower_bound_check(const Graph& g, std::span<const std::vector<VertexLabel>> blocks,
                             std::span<const VertexLabel> reps);

// Pairs (u, v), u < v, with d(u, x) == d(v, x) for every other vertex x.
std::vector<std::pair<VertexId, VertexId>> twin_pairs(const DistanceTable& dist);

// ceil(log3(max_degree + 1)), at least 1.
std::size_t degree_lower_bound(std::size_t max_degree);

}  // namespace metricdim
