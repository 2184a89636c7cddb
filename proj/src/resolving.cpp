#include "metricdim/resolving.hpp"

#include <algorithm>
#include <numeric>

namespace metricdim {

namespace {

// rows[j][x] = d(landmark j, x)
using Rows = std::vector<std::span<const Distance>>;

std::optional<std::pair<VertexId, VertexId>> least_collision(std::size_t n, const Rows& rows) {
  if (n < 2) return std::nullopt;
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  auto code_less = [&](VertexId a, VertexId b) {
    for (const auto& row : rows) {
      if (row[a] != row[b]) return row[a] < row[b];
    }
    return a < b;
  };
  auto code_equal = [&](VertexId a, VertexId b) {
    return std::all_of(rows.begin(), rows.end(), [&](const auto& row) { return row[a] == row[b]; });
  };
  std::sort(order.begin(), order.end(), code_less);
  std::optional<std::pair<VertexId, VertexId>> best;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!code_equal(order[i], order[i + 1])) continue;
    // order[i] heads its group only if the previous entry differs.
    if (i > 0 && code_equal(order[i - 1], order[i])) continue;
    std::pair<VertexId, VertexId> candidate{order[i], order[i + 1]};
    if (!best || candidate < *best) best = candidate;
  }
  return best;
}

Rows table_rows(const DistanceTable& dist, std::span<const VertexId> landmarks) {
  Rows rows;
  rows.reserve(landmarks.size());
  for (VertexId w : landmarks) rows.push_back(dist.row(w));
  return rows;
}

struct LandmarkDistances {
  std::vector<DistanceMap> maps;
  Rows rows;
};

LandmarkDistances landmark_distances(const Graph& g, std::span<const VertexLabel> landmarks) {
  LandmarkDistances out;
  out.maps.reserve(landmarks.size());
  for (const auto& w : landmarks) out.maps.push_back(bfs_distances(g, w));
  for (const auto& m : out.maps) out.rows.push_back(m.values());
  return out;
}

}  // namespace

MetricCode metric_code(const Graph& g, std::span<const VertexLabel> landmarks,
                       std::string_view vertex) {
  if (landmarks.empty()) throw Error(ErrorCode::kEmptyLandmarks, "landmark list is empty");
  VertexId v = g.id(vertex);
  MetricCode code;
  code.landmarks.assign(landmarks.begin(), landmarks.end());
  DistanceMap from_v = bfs_distances(g, v);
  for (const auto& w : landmarks) code.entries.push_back(from_v[g.id(w)]);
  return code;
}

bool is_resolving(const Graph& g, std::span<const VertexLabel> landmarks) {
  return !find_unresolved_pair(g, landmarks).has_value();
}

std::optional<LabelPair> find_unresolved_pair(const Graph& g,
                                              std::span<const VertexLabel> landmarks) {
  auto ld = landmark_distances(g, landmarks);
  auto pair = least_collision(g.vertex_count(), ld.rows);
  if (!pair) return std::nullopt;
  return LabelPair{g.label(pair->first), g.label(pair->second)};
}

bool is_resolving(const DistanceTable& dist, std::span<const VertexId> landmarks) {
  return !find_unresolved_pair(dist, landmarks).has_value();
}

std::optional<std::pair<VertexId, VertexId>> find_unresolved_pair(
    const DistanceTable& dist, std::span<const VertexId> landmarks) {
  return least_collision(dist.size(), table_rows(dist, landmarks));
}

std::vector<VertexLabel> greedy_resolving_set(const Graph& g) {
  DistanceTable dist(g);
  if (!dist.connected()) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  const std::size_t n = g.vertex_count();

  // cls[x] is the class of x under the codes chosen so far.
  std::vector<std::uint32_t> cls(n, 0);
  std::size_t class_count = n == 0 ? 0 : 1;
  std::vector<VertexId> chosen;
  std::vector<char> in_set(n, 0);

  auto split_pairs = [&](VertexId w) {
    // Pairs inside a class that w separates: C(s,2) - sum over distance buckets.
    std::vector<std::uint64_t> class_size(class_count, 0);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> keys;
    keys.reserve(n);
    for (VertexId x = 0; x < n; ++x) {
      ++class_size[cls[x]];
      keys.emplace_back(cls[x], dist(w, x).value());
    }
    std::sort(keys.begin(), keys.end());
    std::uint64_t total = 0;
    for (auto s : class_size) total += s * (s - 1) / 2;
    for (std::size_t i = 0; i < keys.size();) {
      std::size_t j = i;
      while (j < keys.size() && keys[j] == keys[i]) ++j;
      std::uint64_t run = j - i;
      total -= run * (run - 1) / 2;
      i = j;
    }
    return total;
  };

  while (class_count < n) {
    VertexId best = 0;
    std::uint64_t best_gain = 0;
    for (VertexId w = 0; w < n; ++w) {
      if (in_set[w]) continue;
      std::uint64_t gain = split_pairs(w);
      if (gain > best_gain) {
        best_gain = gain;
        best = w;
      }
    }
    chosen.push_back(best);
    in_set[best] = 1;

    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, VertexId>> keyed;
    keyed.reserve(n);
    for (VertexId x = 0; x < n; ++x) keyed.push_back({{cls[x], dist(best, x).value()}, x});
    std::sort(keyed.begin(), keyed.end());
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i > 0 && keyed[i].first != keyed[i - 1].first) ++next;
      cls[keyed[i].second] = next;
    }
    class_count = n == 0 ? 0 : next + 1;
  }

  if (!is_resolving(dist, chosen)) {
    throw Error(ErrorCode::kNotResolving, "greedy set failed verification");
  }
  std::vector<VertexLabel> out;
  out.reserve(chosen.size());
  for (VertexId v : chosen) out.push_back(g.label(v));
  return out;
}

bool block_lower_bound_check(const Graph& g, std::span<const std::vector<VertexLabel>> blocks,
                             std::span<const VertexLabel> reps) {
  if (blocks.size() != reps.size()) {
    throw Error(ErrorCode::kInvalidArgument, "need exactly one representative per block");
  }
  constexpr std::size_t kNoBlock = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(g.vertex_count(), kNoBlock);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const auto& label : blocks[b]) {
      VertexId v = g.id(label);
      if (owner[v] != kNoBlock && owner[v] != b) {
        throw Error(ErrorCode::kBlockOverlap, "vertex '" + label + "' lies in two blocks");
      }
      owner[v] = b;
    }
  }
  std::vector<DistanceMap> from_rep;
  from_rep.reserve(reps.size());
  for (std::size_t b = 0; b < reps.size(); ++b) {
    VertexId r = g.id(reps[b]);
    if (owner[r] != b) {
      throw Error(ErrorCode::kInvalidArgument,
                  "representative '" + reps[b] + "' is not in its block");
    }
    from_rep.push_back(bfs_distances(g, r));
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      for (VertexId x = 0; x < g.vertex_count(); ++x) {
        if (owner[x] == i || owner[x] == j) continue;
        if (from_rep[i][x] != from_rep[j][x]) return false;
      }
    }
  }
  return true;
}

std::vector<std::pair<VertexId, VertexId>> twin_pairs(const DistanceTable& dist) {
  std::vector<std::pair<VertexId, VertexId>> out;
  const std::size_t n = dist.size();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      bool twins = true;
      for (VertexId x = 0; x < n && twins; ++x) {
        if (x == u || x == v) continue;
        twins = dist(u, x) == dist(v, x);
      }
      if (twins) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t degree_lower_bound(std::size_t max_degree) {
  std::size_t k = 1;
  std::size_t power = 3;
  while (power < max_degree + 1) {
    power *= 3;
    ++k;
  }
  return k;
}

}  // namespace metricdim
