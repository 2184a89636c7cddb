#pragma once

// Reference implementations that share no code path with the library's
// BFS, partition refinement, or pruned search. Used to cross-check them.

#include <optional>
#include <vector>

#include "metricdim/graph.hpp"

namespace metricdim::oracle {

// Floyd-Warshall over the adjacency matrix; -1 marks unreachable pairs.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

// Distinct-code test via a set of code vectors.
bool resolves(const std::vector<std::vector<int>>& dist, const std::vector<VertexId>& landmarks);
bool resolves(const Graph& g, const std::vector<VertexLabel>& landmarks);

struct BruteForceDimension {
  std::size_t dimension = 0;
  std::vector<VertexId> witness;
};

// Every subset of every size in lexicographic order, no pruning at all.
// Returns nullopt when no subset of size <= max_k resolves.
std::optional<BruteForceDimension> dimension_bruteforce(const Graph& g, std::size_t max_k);

}  // namespace metricdim::oracle
