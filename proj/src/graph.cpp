#include "metricdim/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace metricdim {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidLabel: return "InvalidLabel";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kEdgeExists: return "EdgeExists";
    case ErrorCode::kEdgeMissing: return "EdgeMissing";
    case ErrorCode::kLabelCollision: return "LabelCollision";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kEmptyLandmarks: return "EmptyLandmarks";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kDisconnectsGraph: return "DisconnectsGraph";
    case ErrorCode::kExceeded: return "Exceeded";
    case ErrorCode::kBudget: return "Budget";
    case ErrorCode::kNotResolving: return "NotResolving";
    case ErrorCode::kBlockOverlap: return "BlockOverlap";
    case ErrorCode::kWindowTooSmall: return "WindowTooSmall";
    case ErrorCode::kEmptyWitness: return "EmptyWitness";
    case ErrorCode::kConflictingStrings: return "ConflictingStrings";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEqualStrings: return "EqualStrings";
    case ErrorCode::kNotARamp: return "NotARamp";
    case ErrorCode::kTooLarge: return "TooLarge";
  }
  return "Unknown";
}

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0 || c == '#';
  });
}

std::uint32_t Distance::value() const {
  if (!reachable()) throw Error(ErrorCode::kInvalidArgument, "distance is unreachable");
  return static_cast<std::uint32_t>(raw_);
}

std::string Distance::to_string() const {
  return reachable() ? std::to_string(raw_) : std::string("inf");
}

std::optional<VertexId> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::id(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorCode::kUnknownVertex, "no vertex '" + std::string(label) + "'");
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto& nb = adjacency_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::has_edge(std::string_view u, std::string_view v) const {
  return has_edge(id(u), id(v));
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<LabelPair> Graph::labeled_edges() const {
  std::vector<LabelPair> out;
  out.reserve(edge_count_);
  for (auto [u, v] : edges()) out.emplace_back(labels_[u], labels_[v]);
  return out;
}

Graph build_graph(std::span<const VertexLabel> vertices, std::span<const LabelPair> edges) {
  std::set<VertexLabel> names;
  auto admit = [&](const VertexLabel& label) {
    if (!is_valid_label(label)) {
      throw Error(ErrorCode::kInvalidLabel, "invalid vertex label '" + label + "'");
    }
    names.insert(label);
  };
  for (const auto& v : vertices) admit(v);
  for (const auto& [a, b] : edges) {
    admit(a);
    admit(b);
    if (a == b) throw Error(ErrorCode::kSelfLoop, "self-loop at '" + a + "'");
  }

  Graph g;
  g.labels_.assign(names.begin(), names.end());
  g.index_.reserve(g.labels_.size());
  for (VertexId i = 0; i < g.labels_.size(); ++i) g.index_.emplace(g.labels_[i], i);
  g.adjacency_.resize(g.labels_.size());
  for (const auto& [a, b] : edges) {
    VertexId u = g.index_.at(a);
    VertexId v = g.index_.at(b);
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& nb : g.adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    degree_sum += nb.size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

Graph build_graph(std::span<const LabelPair> edges) { return build_graph({}, edges); }

Graph build_graph(std::initializer_list<LabelPair> edges) {
  return build_graph(std::span<const LabelPair>(edges.begin(), edges.size()));
}

Graph add_edge(const Graph& g, std::string_view u, std::string_view v) {
  VertexId a = g.id(u);
  VertexId b = g.id(v);
  if (a == b) throw Error(ErrorCode::kSelfLoop, "self-loop at '" + std::string(u) + "'");
  if (g.has_edge(a, b)) {
    throw Error(ErrorCode::kEdgeExists,
                "edge " + std::string(u) + "-" + std::string(v) + " already present");
  }
  Graph out = g;
  auto insert = [](std::vector<VertexId>& nb, VertexId x) {
    nb.insert(std::lower_bound(nb.begin(), nb.end(), x), x);
  };
  insert(out.adjacency_[a], b);
  insert(out.adjacency_[b], a);
  ++out.edge_count_;
  return out;
}

Graph remove_edge(const Graph& g, std::string_view u, std::string_view v) {
  VertexId a = g.id(u);
  VertexId b = g.id(v);
  if (a == b || !g.has_edge(a, b)) {
    throw Error(ErrorCode::kEdgeMissing,
                "edge " + std::string(u) + "-" + std::string(v) + " not present");
  }
  Graph out = g;
  auto erase = [](std::vector<VertexId>& nb, VertexId x) {
    nb.erase(std::lower_bound(nb.begin(), nb.end(), x));
  };
  erase(out.adjacency_[a], b);
  erase(out.adjacency_[b], a);
  --out.edge_count_;
  return out;
}

namespace {

std::vector<Distance> bfs_row(const Graph& g, VertexId source) {
  std::vector<Distance> dist(g.vertex_count(), Distance::unreachable());
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  dist[source] = Distance::hops(0);
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId x = queue[head];
    std::uint32_t next = dist[x].value() + 1;
    for (VertexId y : g.neighbors(x)) {
      if (!dist[y].reachable()) {
        dist[y] = Distance::hops(next);
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace

DistanceMap bfs_distances(const Graph& g, VertexId source) {
  if (source >= g.vertex_count()) {
    throw Error(ErrorCode::kUnknownVertex, "vertex id out of range");
  }
  return DistanceMap(source, bfs_row(g, source));
}

DistanceMap bfs_distances(const Graph& g, std::string_view source) {
  return bfs_distances(g, g.id(source));
}

DistanceTable::DistanceTable(const Graph& g) : n_(g.vertex_count()) {
  cells_.reserve(n_ * n_);
  for (VertexId s = 0; s < n_; ++s) {
    auto row = bfs_row(g, s);
    if (s == 0) {
      connected_ = std::all_of(row.begin(), row.end(), [](Distance d) { return d.reachable(); });
    }
    cells_.insert(cells_.end(), row.begin(), row.end());
  }
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto row = bfs_row(g, 0);
  return std::all_of(row.begin(), row.end(), [](Distance d) { return d.reachable(); });
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

}  // namespace metricdim
