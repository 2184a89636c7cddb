#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "metricdim/error.hpp"

namespace metricdim {

using VertexLabel = std::string;
using VertexId = std::uint32_t;
using LabelPair = std::pair<VertexLabel, VertexLabel>;

// A label is nonempty and contains no whitespace or '#'.
bool is_valid_label(std::string_view label);

// Hop count between two vertices, or unreachable. There is deliberately no
// arithmetic on this type: callers must unwrap with value() first.
class Distance {
 public:
  constexpr Distance() = default;
  static constexpr Distance unreachable() { return Distance(); }
  static constexpr Distance hops(std::uint32_t n) { return Distance(static_cast<std::int32_t>(n)); }

  constexpr bool reachable() const { return raw_ >= 0; }
  // Throws if unreachable.
  std::uint32_t value() const;

  // UNREACHABLE equals itself and sorts after every finite distance.
  constexpr bool operator==(const Distance&) const = default;
  constexpr std::strong_ordering operator<=>(const Distance& other) const {
    if (reachable() != other.reachable()) {
      return reachable() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return raw_ <=> other.raw_;
  }

  std::string to_string() const;

 private:
  constexpr explicit Distance(std::int32_t raw) : raw_(raw) {}
  std::int32_t raw_ = -1;
};

// Undirected simple graph over string labels. Vertices are numbered
// 0..n-1 in sorted label order and every adjacency list is sorted, so all
// iteration orders are deterministic. Immutable once built; edits return new
// graphs.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
  const VertexLabel& label(VertexId id) const { return labels_.at(id); }
  std::optional<VertexId> find(std::string_view label) const;
  // Throws UnknownVertex.
  VertexId id(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool has_edge(VertexId u, VertexId v) const;
  bool has_edge(std::string_view u, std::string_view v) const;

  // Each edge once, smaller id first, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  std::vector<LabelPair> labeled_edges() const;

  bool operator==(const Graph& other) const {
    return labels_ == other.labels_ && adjacency_ == other.adjacency_;
  }

 private:
  friend Graph build_graph(std::span<const VertexLabel>, std::span<const LabelPair>);
  friend Graph add_edge(const Graph&, std::string_view, std::string_view);
  friend Graph remove_edge(const Graph&, std::string_view, std::string_view);

  std::vector<VertexLabel> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Builds a graph containing every listed vertex plus every edge endpoint.
// Duplicate edges collapse. Throws SelfLoop, InvalidLabel.
Graph build_graph(std::span<const VertexLabel> vertices, std::span<const LabelPair> edges);
Graph build_graph(std::span<const LabelPair> edges);
Graph build_graph(std::initializer_list<LabelPair> edges);

// Throws SelfLoop, UnknownVertex, EdgeExists.
Graph add_edge(const Graph& g, std::string_view u, std::string_view v);
// Throws UnknownVertex, EdgeMissing.
Graph remove_edge(const Graph& g, std::string_view u, std::string_view v);

// Distances from a single source, indexed by VertexId.
class DistanceMap {
 public:
  DistanceMap(VertexId source, std::vector<Distance> dist)
      : source_(source), dist_(std::move(dist)) {}

  VertexId source() const noexcept { return source_; }
  Distance operator[](VertexId v) const { return dist_[v]; }
  Distance at(const Graph& g, std::string_view label) const { return dist_.at(g.id(label)); }
  std::span<const Distance> values() const noexcept { return dist_; }

 private:
  VertexId source_;
  std::vector<Distance> dist_;
};

DistanceMap bfs_distances(const Graph& g, VertexId source);
// Throws UnknownVertex.
DistanceMap bfs_distances(const Graph& g, std::string_view source);

// Row-major table, one BFS per vertex.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g);

  std::size_t size() const noexcept { return n_; }
  Distance operator()(VertexId u, VertexId v) const { return cells_[u * n_ + v]; }
  std::span<const Distance> row(VertexId u) const { return {cells_.data() + u * n_, n_}; }
  bool connected() const noexcept { return connected_; }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> cells_;
  bool connected_ = true;
};

// The empty graph counts as connected.
bool is_connected(const Graph& g);
std::size_t max_degree(const Graph& g);

}  // namespace metricdim
